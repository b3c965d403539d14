#include "odlro_lab/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace odlro_lab {

int auto_solver_cutoff(int dimension, int cutoff) {
    // Large enough that the occupancy sum is converged over the sweep
    // ranges used here; the tail_weight column exposes any residual.
    const int floor_cutoff = dimension == 3 ? 32 : (dimension == 2 ? 128 : 2048);
    return std::max(cutoff, floor_cutoff);
}

std::vector<double> temperature_grid(double t_min, double t_max, int steps,
                                     bool log_spacing) {
    if (!(t_min > 0.0) || t_max < t_min || steps < 1)
        throw std::invalid_argument("temperature_grid: need 0 < t_min <= t_max, steps >= 1");
    std::vector<double> grid;
    grid.reserve(steps);
    if (steps == 1) {
        grid.push_back(t_min);
        return grid;
    }
    for (int i = 0; i < steps; ++i) {
        const double f = double(i) / double(steps - 1);
        grid.push_back(log_spacing
                           ? std::exp(std::log(t_min) + f * (std::log(t_max) - std::log(t_min)))
                           : t_min + f * (t_max - t_min));
    }
    return grid;
}

SweepResult run_temperature_sweep(const SweepSettings& settings) {
    settings.partition.validate();
    if (settings.temperatures.empty())
        throw std::invalid_argument("run_temperature_sweep: empty temperature grid");
    if (settings.n_particles <= 0.0)
        throw std::invalid_argument("run_temperature_sweep: N must be positive");

    SweepResult result;
    result.modes = box_modes(settings.dimension, settings.cutoff);
    const int solver_cutoff = settings.solver_cutoff > 0
                                  ? std::max(settings.solver_cutoff, settings.cutoff)
                                  : auto_solver_cutoff(settings.dimension, settings.cutoff);
    result.solver_modes = box_modes(settings.dimension, solver_cutoff);
    result.grams = gram_matrices(result.modes, settings.partition);
    if (settings.dimension == 3)
        result.t_c = critical_temperature(3, settings.n_particles, 1.0);

    const bool half_box = settings.partition.adjacent() && settings.partition.a == 0.5;

    for (double t : settings.temperatures) {
        SweepRow row;
        row.temperature = t;
        if (settings.dimension == 3) row.t_over_tc = t / result.t_c;
        try {
            row.mu = solve_chemical_potential(result.solver_modes, settings.n_particles, t);
            row.report_occupations = occupations(result.modes, row.mu, t);
            row.condensate_fraction =
                row.report_occupations.front() / settings.n_particles;
            double report_sum = 0.0;
            for (double n : row.report_occupations) report_sum += n;
            row.tail_weight = 1.0 - report_sum / settings.n_particles;

            const ChiVector chi = make_chi(row.report_occupations, result.grams);
            row.chi_norm_sq = chi_norm_squared(chi, result.grams);
            const NegativityReport analytic =
                half_box ? negativity_adjacent(chi, result.grams)
                         : negativity_gapped(chi, result.grams);
            row.negativity_analytic = analytic.value;
            row.method = analytic.method;

            if (settings.oracle) {
                const NegativityReport oracle =
                    pt_oracle(row.report_occupations, result.modes, settings.partition,
                              result.grams);
                row.negativity_oracle = oracle.value;
                row.negative_count = oracle.negative_count;
            }
        } catch (const std::exception& ex) {
            row.error = ex.what();
            result.all_ok = false;
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace odlro_lab
