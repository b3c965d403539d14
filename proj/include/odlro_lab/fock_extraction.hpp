#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace odlro_lab {

// Exact simulation of the delta-pulse extraction protocol: one particle in
// a well split into half-modes, one particle in each of two boxes, coupled
// by e^{igV}. The dynamics closes on four configurations.

/// Basis configurations of the closed subspace.
enum class ProtocolConfig : int {
    well_a = 0,      // well particle in the A half, both box particles present
    well_b = 1,      // well particle in the B half, both box particles present
    molecule_a = 2,  // molecule in box A, particle in box B, well empty
    molecule_b = 3,  // molecule in box B, particle in box A, well empty
};

struct ProtocolState {
    std::array<std::complex<double>, 4> amplitudes{};

    std::complex<double>& operator[](ProtocolConfig c) {
        return amplitudes[static_cast<int>(c)];
    }
    std::complex<double> operator[](ProtocolConfig c) const {
        return amplitudes[static_cast<int>(c)];
    }
    double norm_squared() const;
};

/// Two-qubit state of the boxes: basis {up,down}_A x {up,down}_B with
/// up = particle-no-molecule, down = molecule-no-particle; index 2a + b.
struct TwoQubitState {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
};

// (1/sqrt2)(|well A half> + |well B half>), no molecules.
ProtocolState build_initial_state();

// e^{igV}: V exchanges well_a <-> molecule_a and well_b <-> molecule_b,
// so each block rotates as cos(g) I + i sin(g) X. Norm preserving.
ProtocolState apply_coupling(const ProtocolState& state, double g);

// Partial trace over the well particle's location (A half / B half / absent
// are mutually orthogonal environment states).
TwoQubitState reduced_box_state(const ProtocolState& state);

// (1/2)(sqrt(cos^4 g + sin^4 g) - cos^2 g): magnitude of the lone negative
// eigenvalue of the partially transposed reduced state.
double analytic_extraction_negativity(double g);

}  // namespace odlro_lab
