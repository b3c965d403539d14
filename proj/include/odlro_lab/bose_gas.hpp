#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace odlro_lab {

// Units: hbar = m = k_B = 1, hard-wall box of unit side.

/// Single-particle eigenstate of the box potential.
struct Mode {
    std::array<int, 3> n{1, 1, 1};  // quantum numbers, entries >= 1 for axis < dim
    int dim = 1;
    double energy = 0.0;

    Mode() = default;
    Mode(std::array<int, 3> qn, int dimension);
};

enum class Ensemble { grand_canonical, canonical_bruteforce };

/// Thermal occupation profile of a mode set.
struct ThermalState {
    double temperature = 0.0;
    double particle_number = 0.0;
    double chemical_potential = 0.0;
    std::vector<double> occupations;
    Ensemble ensemble = Ensemble::grand_canonical;
};

/// Chemical-potential bisection failed; carries the final bracket.
struct SolverError : std::runtime_error {
    double bracket_lo;
    double bracket_hi;
    SolverError(const std::string& what, double lo, double hi)
        : std::runtime_error(what), bracket_lo(lo), bracket_hi(hi) {}
};

// All modes with 1 <= n_i <= cutoff, ascending energy, ties lexicographic.
std::vector<Mode> box_modes(int dimension, int cutoff);

/// Bose-Einstein mean occupation 1/(e^{(e-mu)/T} - 1); 0 on overflow.
double bose_occupation(double energy, double mu, double temperature);

// mu < E0 such that the occupancy sum over `modes` equals n_particles
// within 1e-9 relative, by bisection on (mu_low, E0).
double solve_chemical_potential(const std::vector<Mode>& modes, double n_particles,
                                double temperature);

std::vector<double> occupations(const std::vector<Mode>& modes, double mu,
                                double temperature);

// Exact canonical <n_k> by exhaustive enumeration of occupation
// configurations; restricted to n_particles <= 6 and <= 8 modes.
std::vector<double> canonical_occupations_bruteforce(const std::vector<Mode>& modes,
                                                     int n_particles,
                                                     double temperature);

// T_c = 2 pi (N / (V zeta(3/2)))^{2/3}; defined for the 3D box only.
double critical_temperature(int dimension, double n_particles, double volume);

ThermalState solve_thermal_state(const std::vector<Mode>& modes, double n_particles,
                                 double temperature);

inline constexpr double kZeta32 = 2.6123753486854883;

}  // namespace odlro_lab
