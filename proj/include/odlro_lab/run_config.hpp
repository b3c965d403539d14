#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace odlro_lab {

/// Effective configuration of a CLI run. Precedence: built-in defaults,
/// then the JSON config file (ODLRO_LAB_CONFIG or --config), then flags.
struct RunConfig {
    int dimension = 3;
    int mode_cutoff = 8;
    int solver_cutoff = 0;  // 0 = auto
    double n_particles = 1e4;
    double t_min = 0.1;   // units of T_c in 3D, absolute otherwise
    double t_max = 3.0;
    int t_steps = 50;
    std::string t_scale = "log";  // log | linear
    double partition_a = 0.5;
    double partition_b = 0.5;
    int partition_axis = 0;
    double odlro_threshold = 0.1;
    bool oracle = false;
    int g_steps = 64;
    int scan_points = 33;
    std::string out;  // empty = stdout
    std::string format = "csv";  // csv | json
    std::uint64_t seed = 12345;

    void validate() const;
};

// Defaults overlaid with the config file named by `config_path` (when set)
// or by the ODLRO_LAB_CONFIG environment variable.
RunConfig load_config(const std::optional<std::string>& config_path);

void apply_config_file(RunConfig& config, const std::string& path);

/// Compact single-line JSON of the effective config, field order fixed.
std::string effective_config_json(const RunConfig& config);

}  // namespace odlro_lab
