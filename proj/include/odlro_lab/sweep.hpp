#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "odlro_lab/bose_gas.hpp"
#include "odlro_lab/geometry.hpp"
#include "odlro_lab/negativity.hpp"

namespace odlro_lab {

// Temperature-sweep pipeline. The chemical potential is solved on an
// extended "solver" mode set so the truncated report set carries a
// meaningful tail weight 1 - sum_trunc <n_k> / N; negativity coefficients
// are renormalized over the report set so formula and oracle see identical
// inputs.

struct SweepSettings {
    int dimension = 3;
    int cutoff = 8;          // report / negativity mode set
    int solver_cutoff = 0;   // 0 = auto (see auto_solver_cutoff)
    double n_particles = 1e4;
    PartitionSpec partition{0.5, 0.5, 0};
    std::vector<double> temperatures;  // absolute units
    bool oracle = false;
};

struct SweepRow {
    double temperature = 0.0;
    double t_over_tc = std::numeric_limits<double>::quiet_NaN();  // 3D only
    double mu = 0.0;
    double condensate_fraction = 0.0;  // n_0 / N, solver-set normalization
    double tail_weight = 0.0;          // 1 - sum_report <n_k> / N
    double chi_norm_sq = 0.0;
    double negativity_analytic = 0.0;
    NegativityMethod method = NegativityMethod::analytic_adjacent;
    std::optional<double> negativity_oracle;
    std::optional<int> negative_count;
    std::vector<double> report_occupations;
    std::string error;  // empty on success
};

struct SweepResult {
    std::vector<Mode> modes;         // report set
    std::vector<Mode> solver_modes;  // superset used for the mu solve
    GramSet grams;
    double t_c = std::numeric_limits<double>::quiet_NaN();
    std::vector<SweepRow> rows;
    bool all_ok = true;
};

int auto_solver_cutoff(int dimension, int cutoff);

std::vector<double> temperature_grid(double t_min, double t_max, int steps,
                                     bool log_spacing);

SweepResult run_temperature_sweep(const SweepSettings& settings);

}  // namespace odlro_lab
