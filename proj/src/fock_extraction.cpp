#include "odlro_lab/fock_extraction.hpp"

#include <cmath>

namespace odlro_lab {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

double ProtocolState::norm_squared() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return s;
}

ProtocolState build_initial_state() {
    ProtocolState state;
    state[ProtocolConfig::well_a] = kInvSqrt2;
    state[ProtocolConfig::well_b] = kInvSqrt2;
    return state;
}

ProtocolState apply_coupling(const ProtocolState& state, double g) {
    const double c = std::cos(g);
    const std::complex<double> is(0.0, std::sin(g));
    ProtocolState out;
    out[ProtocolConfig::well_a] =
        c * state[ProtocolConfig::well_a] + is * state[ProtocolConfig::molecule_a];
    out[ProtocolConfig::molecule_a] =
        is * state[ProtocolConfig::well_a] + c * state[ProtocolConfig::molecule_a];
    out[ProtocolConfig::well_b] =
        c * state[ProtocolConfig::well_b] + is * state[ProtocolConfig::molecule_b];
    out[ProtocolConfig::molecule_b] =
        is * state[ProtocolConfig::well_b] + c * state[ProtocolConfig::molecule_b];
    return out;
}

TwoQubitState reduced_box_state(const ProtocolState& state) {
    // Well-particle environment states |A half>, |B half>, |absent> are
    // mutually orthogonal: well_a and well_b contribute incoherently (both
    // to box state |up up>), the two molecule branches stay coherent.
    const auto wa = state[ProtocolConfig::well_a];
    const auto wb = state[ProtocolConfig::well_b];
    const auto ma = state[ProtocolConfig::molecule_a];  // box state |down up>
    const auto mb = state[ProtocolConfig::molecule_b];  // box state |up down>

    TwoQubitState out;
    out.rho(0, 0) = std::norm(wa) + std::norm(wb);
    out.rho(1, 1) = std::norm(mb);
    out.rho(2, 2) = std::norm(ma);
    out.rho(1, 2) = mb * std::conj(ma);
    out.rho(2, 1) = ma * std::conj(mb);
    return out;
}

double analytic_extraction_negativity(double g) {
    const double c2 = std::cos(g) * std::cos(g);
    const double s2 = std::sin(g) * std::sin(g);
    return 0.5 * (std::sqrt(c2 * c2 + s2 * s2) - c2);
}

}  // namespace odlro_lab
