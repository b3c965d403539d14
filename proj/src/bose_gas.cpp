#include "odlro_lab/bose_gas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace odlro_lab {

namespace {
constexpr double kHalfPiSquared = std::numbers::pi * std::numbers::pi / 2.0;
}

Mode::Mode(std::array<int, 3> qn, int dimension) : n(qn), dim(dimension) {
    double sum_sq = 0.0;
    for (int i = 0; i < dim; ++i) sum_sq += double(n[i]) * double(n[i]);
    energy = kHalfPiSquared * sum_sq;
}

std::vector<Mode> box_modes(int dimension, int cutoff) {
    if (dimension < 1 || dimension > 3)
        throw std::invalid_argument("box_modes: dimension must be 1, 2 or 3");
    if (cutoff < 1) throw std::invalid_argument("box_modes: cutoff must be >= 1");

    std::vector<Mode> modes;
    std::array<int, 3> qn{1, 1, 1};
    const int ny_max = dimension >= 2 ? cutoff : 1;
    const int nz_max = dimension >= 3 ? cutoff : 1;
    modes.reserve(static_cast<std::size_t>(cutoff) * ny_max * nz_max);
    for (int nx = 1; nx <= cutoff; ++nx)
        for (int ny = 1; ny <= ny_max; ++ny)
            for (int nz = 1; nz <= nz_max; ++nz) {
                qn = {nx, ny, nz};
                modes.emplace_back(qn, dimension);
            }
    std::sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.n < b.n;
    });
    return modes;
}

double bose_occupation(double energy, double mu, double temperature) {
    const double x = (energy - mu) / temperature;
    const double d = std::expm1(x);
    if (!std::isfinite(d)) return 0.0;
    return 1.0 / d;
}

namespace {

double occupancy_sum(const std::vector<Mode>& modes, double mu, double t) {
    double s = 0.0;
    for (const Mode& m : modes) s += bose_occupation(m.energy, mu, t);
    return s;
}

}  // namespace

double solve_chemical_potential(const std::vector<Mode>& modes, double n_particles,
                                double temperature) {
    if (modes.empty()) throw std::invalid_argument("solve_chemical_potential: no modes");
    if (n_particles <= 0.0 || temperature <= 0.0)
        throw std::invalid_argument("solve_chemical_potential: need N > 0, T > 0");

    const double e0 = modes.front().energy;

    // Lower bracket: start a fixed distance below E0, double until the
    // occupancy sum falls below N.
    double width = std::max(10.0 * temperature, 10.0 * e0 + 1.0);
    double lo = e0 - width;
    for (int i = 0; occupancy_sum(modes, lo, temperature) > n_particles; ++i) {
        if (i > 200)
            throw SolverError("solve_chemical_potential: bracket expansion failed", lo, e0);
        width *= 2.0;
        lo = e0 - width;
    }

    // Occupancy diverges as mu -> E0, so (lo, E0) brackets the root.
    double hi = e0;
    double mid = lo;
    constexpr double kRelTol = 1e-12;
    for (int i = 0; i < 2000; ++i) {
        mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket exhausted at double precision
        const double s = occupancy_sum(modes, mid, temperature);
        if (std::abs(s - n_particles) <= kRelTol * n_particles) return mid;
        (s < n_particles ? lo : hi) = mid;
    }
    const double s = occupancy_sum(modes, mid, temperature);
    if (std::abs(s - n_particles) <= 1e-9 * n_particles) return mid;
    throw SolverError("solve_chemical_potential: bisection did not converge", lo, hi);
}

std::vector<double> occupations(const std::vector<Mode>& modes, double mu,
                                double temperature) {
    if (modes.empty()) throw std::invalid_argument("occupations: no modes");
    if (mu >= modes.front().energy)
        throw std::invalid_argument("occupations: mu must lie below the ground energy");
    std::vector<double> out;
    out.reserve(modes.size());
    for (const Mode& m : modes) out.push_back(bose_occupation(m.energy, mu, temperature));
    return out;
}

std::vector<double> canonical_occupations_bruteforce(const std::vector<Mode>& modes,
                                                     int n_particles,
                                                     double temperature) {
    if (n_particles < 1 || n_particles > 6)
        throw std::invalid_argument("canonical_occupations_bruteforce: N must be 1..6");
    if (modes.empty() || modes.size() > 8)
        throw std::invalid_argument("canonical_occupations_bruteforce: 1..8 modes");
    if (temperature <= 0.0)
        throw std::invalid_argument("canonical_occupations_bruteforce: T > 0 required");

    const std::size_t m = modes.size();
    const double e_shift = double(n_particles) * modes.front().energy;
    std::vector<double> weighted(m, 0.0);
    std::vector<int> cfg(m, 0);
    double partition_function = 0.0;

    // Depth-first enumeration of all (n_1, ..., n_m) with sum = N.
    auto recurse = [&](auto&& self, std::size_t idx, int left, double e_total) -> void {
        if (idx == m - 1) {
            cfg[idx] = left;
            const double e = e_total + left * modes[idx].energy;
            const double w = std::exp(-(e - e_shift) / temperature);
            partition_function += w;
            for (std::size_t k = 0; k < m; ++k) weighted[k] += w * cfg[k];
            return;
        }
        for (int n = 0; n <= left; ++n) {
            cfg[idx] = n;
            self(self, idx + 1, left - n, e_total + n * modes[idx].energy);
        }
    };
    recurse(recurse, 0, n_particles, 0.0);

    for (double& w : weighted) w /= partition_function;
    return weighted;
}

double critical_temperature(int dimension, double n_particles, double volume) {
    if (dimension != 3)
        throw std::invalid_argument(
            "critical_temperature: defined for the 3D box only");
    if (n_particles < 1.0 || volume <= 0.0)
        throw std::invalid_argument("critical_temperature: need N >= 1, volume > 0");
    return 2.0 * std::numbers::pi *
           std::pow(n_particles / (volume * kZeta32), 2.0 / 3.0);
}

ThermalState solve_thermal_state(const std::vector<Mode>& modes, double n_particles,
                                 double temperature) {
    ThermalState state;
    state.temperature = temperature;
    state.particle_number = n_particles;
    state.chemical_potential = solve_chemical_potential(modes, n_particles, temperature);
    state.occupations = occupations(modes, state.chemical_potential, temperature);
    state.ensemble = Ensemble::grand_canonical;
    return state;
}

}  // namespace odlro_lab
