#include "odlro_lab/runners.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include "odlro_lab/bose_gas.hpp"
#include "odlro_lab/fock_extraction.hpp"
#include "odlro_lab/format.hpp"
#include "odlro_lab/negativity.hpp"
#include "odlro_lab/odlro.hpp"
#include "odlro_lab/sweep.hpp"
#include "odlro_lab/validation.hpp"

namespace odlro_lab {

namespace {

std::vector<double> absolute_temperatures(const RunConfig& config, double* t_c_out) {
    // 3D grids are specified in units of T_c, others in absolute units.
    const std::vector<double> grid = temperature_grid(config.t_min, config.t_max,
                                                      config.t_steps,
                                                      config.t_scale == "log");
    if (config.dimension != 3) {
        if (t_c_out) *t_c_out = std::numeric_limits<double>::quiet_NaN();
        return grid;
    }
    const double t_c = critical_temperature(3, config.n_particles, 1.0);
    if (t_c_out) *t_c_out = t_c;
    std::vector<double> absolute;
    absolute.reserve(grid.size());
    for (double t : grid) absolute.push_back(t * t_c);
    return absolute;
}

}  // namespace

int run_extract(const RunConfig& config) {
    config.validate();
    Table table;
    table.config_comment = effective_config_json(config);
    table.columns = {"g", "negativity_analytic", "negativity_oracle", "abs_diff"};
    for (int i = 0; i < config.g_steps; ++i) {
        const double g = config.g_steps == 1
                             ? 0.0
                             : std::numbers::pi * double(i) / double(config.g_steps - 1);
        const double analytic = analytic_extraction_negativity(g);
        const ProtocolState state = apply_coupling(build_initial_state(), g);
        const PtSpectrum oracle = negativity_of_density(reduced_box_state(state).rho, 2, 2);
        table.rows.push_back({cell(g), cell(analytic), cell(oracle.negativity),
                              cell(std::abs(analytic - oracle.negativity))});
    }
    write_output(table, config.out, config.format);
    return 0;
}

int run_sweep(const RunConfig& config) {
    config.validate();
    SweepSettings settings;
    settings.dimension = config.dimension;
    settings.cutoff = config.mode_cutoff;
    settings.solver_cutoff = config.solver_cutoff;
    settings.n_particles = config.n_particles;
    settings.partition = PartitionSpec{config.partition_a, config.partition_b,
                                       config.partition_axis};
    settings.oracle = config.oracle;
    settings.temperatures = absolute_temperatures(config, nullptr);

    const SweepResult result = run_temperature_sweep(settings);

    Table table;
    table.config_comment = effective_config_json(config);
    table.columns = {"T",           "T_over_Tc",          "mu",
                     "condensate_fraction", "tail_weight", "chi_norm_sq",
                     "negativity_analytic", "negativity_oracle",
                     "negative_eigenvalue_count", "error"};
    for (const SweepRow& row : result.rows) {
        std::vector<Cell> cells;
        cells.push_back(cell(row.temperature));
        cells.push_back(std::isnan(row.t_over_tc) ? cell() : cell(row.t_over_tc));
        if (row.error.empty()) {
            cells.push_back(cell(row.mu));
            cells.push_back(cell(row.condensate_fraction));
            cells.push_back(cell(row.tail_weight));
            cells.push_back(cell(row.chi_norm_sq));
            cells.push_back(cell(row.negativity_analytic));
            cells.push_back(row.negativity_oracle ? cell(*row.negativity_oracle) : cell());
            cells.push_back(row.negative_count ? cell(static_cast<long long>(*row.negative_count))
                                               : cell());
            cells.push_back(cell());
        } else {
            for (int i = 0; i < 7; ++i) cells.push_back(cell());
            cells.push_back(cell(row.error));
        }
        table.rows.push_back(std::move(cells));
    }
    write_output(table, config.out, config.format);
    return result.all_ok ? 0 : 1;
}

int run_scan(const RunConfig& config) {
    config.validate();
    double t_c = 0.0;
    const std::vector<double> temperatures = absolute_temperatures(config, &t_c);
    const int solver_cutoff =
        config.solver_cutoff > 0
            ? std::max(config.solver_cutoff, config.mode_cutoff)
            : auto_solver_cutoff(config.dimension, config.mode_cutoff);
    const std::vector<Mode> modes = box_modes(config.dimension, solver_cutoff);
    const auto path =
        antipodal_path(config.dimension, config.partition_axis, config.scan_points);

    Table table;
    table.config_comment = effective_config_json(config);
    table.columns = {"T", "separation", "x", "x_prime", "rho1_offdiag", "alpha",
                     "odlro_flag", "error"};
    bool all_ok = true;
    std::vector<std::pair<double, std::vector<double>>> thermal_states;
    for (double t : temperatures) {
        try {
            const double mu = solve_chemical_potential(modes, config.n_particles, t);
            thermal_states.emplace_back(t, occupations(modes, mu, t));
            const OffDiagonalScan scan =
                offdiagonal_scan(thermal_states.back().second, modes, path);
            for (const ScanPoint& point : scan.points)
                table.rows.push_back({cell(t), cell(point.separation), cell(point.x),
                                      cell(point.x_prime), cell(point.value), cell(),
                                      cell(), cell()});
        } catch (const std::exception& ex) {
            all_ok = false;
            table.rows.push_back({cell(t), cell(), cell(), cell(), cell(), cell(),
                                  cell(), cell(std::string(ex.what()))});
        }
    }
    // spectral block: dominant-eigenvalue diagnostic per temperature
    for (const auto& [t, occ] : thermal_states) {
        const OdlroReport report = odlro_detect(occ, config.odlro_threshold);
        table.rows.push_back({cell(t), cell(), cell(), cell(), cell(),
                              cell(report.alpha), cell(report.flag), cell()});
    }
    write_output(table, config.out, config.format);
    return all_ok ? 0 : 1;
}

int run_validate(const RunConfig& config, std::ostream& report) {
    config.validate();
    const std::vector<CheckResult> results = run_all_checks(config.seed);
    int failures = 0;
    std::string text;
    for (const CheckResult& result : results) {
        text += result.passed ? "[PASS] " : "[FAIL] ";
        text += result.name;
        text += ": ";
        text += result.detail;
        text += '\n';
        if (!result.passed) ++failures;
    }
    text += failures == 0 ? "all properties hold\n"
                          : std::to_string(failures) + " properties failed\n";
    report << text;
    if (!config.out.empty()) {
        std::ofstream file(config.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file: " + config.out);
        file << text;
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace odlro_lab
