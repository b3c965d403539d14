#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "odlro_lab/run_config.hpp"
#include "odlro_lab/runners.hpp"

namespace {

// --config must win over the environment default but lose to other flags,
// so it is pulled out before CLI11 sees the rest.
std::optional<std::string> prescan_config_path(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
        if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
    }
    return std::nullopt;
}

void add_shared_options(CLI::App* cmd, odlro_lab::RunConfig& config) {
    cmd->add_option("--config", "JSON config file (default: $ODLRO_LAB_CONFIG)");
    cmd->add_option("--dimension", config.dimension, "trap dimension (1, 2 or 3)");
    cmd->add_option("--mode-cutoff", config.mode_cutoff, "max quantum number per axis");
    cmd->add_option("--solver-cutoff", config.solver_cutoff,
                    "mode cutoff for the chemical-potential solve (0 = auto)");
    cmd->add_option("--n-particles", config.n_particles, "particle number N");
    cmd->add_option("--t-min", config.t_min, "grid start (units of T_c in 3D)");
    cmd->add_option("--t-max", config.t_max, "grid end (units of T_c in 3D)");
    cmd->add_option("--t-steps", config.t_steps, "temperature grid points");
    cmd->add_option("--t-scale", config.t_scale, "grid spacing: log or linear");
    cmd->add_option("--partition-a", config.partition_a, "right edge of region A");
    cmd->add_option("--partition-b", config.partition_b, "left edge of region B");
    cmd->add_option("--partition-axis", config.partition_axis, "split axis");
    cmd->add_option("--threshold", config.odlro_threshold, "ODLRO detection threshold");
    cmd->add_flag("--oracle", config.oracle, "run the partial-transpose eigensolver per point");
    cmd->add_option("--g-steps", config.g_steps, "coupling grid points for extract");
    cmd->add_option("--scan-points", config.scan_points, "separations per scan");
    cmd->add_option("--out", config.out, "output path (default: stdout)");
    cmd->add_option("--format", config.format, "csv or json");
    cmd->add_option("--seed", config.seed, "seed for randomized property checks");
}

}  // namespace

int main(int argc, char** argv) {
    odlro_lab::RunConfig config;
    try {
        config = odlro_lab::load_config(prescan_config_path(argc, argv));
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }

    CLI::App app{"single-particle entanglement and ODLRO diagnostics for the ideal Bose gas"};
    app.require_subcommand(1);
    CLI::App* extract = app.add_subcommand(
        "extract", "delta-pulse extraction protocol: negativity vs coupling strength");
    CLI::App* sweep = app.add_subcommand(
        "sweep", "negativity of the single-particle density matrix vs temperature");
    CLI::App* scan = app.add_subcommand(
        "scan", "off-diagonal position scan and dominant-eigenvalue detection");
    CLI::App* validate = app.add_subcommand("validate", "run the full invariant suite");
    for (CLI::App* cmd : {extract, sweep, scan, validate})
        add_shared_options(cmd, config);

    CLI11_PARSE(app, argc, argv);

    try {
        if (extract->parsed()) return odlro_lab::run_extract(config);
        if (sweep->parsed()) return odlro_lab::run_sweep(config);
        if (scan->parsed()) return odlro_lab::run_scan(config);
        return odlro_lab::run_validate(config, std::cout);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
}
