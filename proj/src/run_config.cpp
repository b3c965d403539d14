#include "odlro_lab/run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "odlro_lab/format.hpp"
#include <json.hpp>

namespace odlro_lab {

void RunConfig::validate() const {
    if (dimension < 1 || dimension > 3)
        throw std::invalid_argument("config: dimension must be 1, 2 or 3");
    if (mode_cutoff < 1) throw std::invalid_argument("config: mode_cutoff must be >= 1");
    if (solver_cutoff < 0) throw std::invalid_argument("config: solver_cutoff must be >= 0");
    if (n_particles <= 0.0) throw std::invalid_argument("config: n_particles must be > 0");
    if (!(t_min > 0.0)) throw std::invalid_argument("config: t_min must be > 0");
    if (t_max < t_min) throw std::invalid_argument("config: t_max must be >= t_min");
    if (t_steps < 1) throw std::invalid_argument("config: t_steps must be >= 1");
    if (t_scale != "log" && t_scale != "linear")
        throw std::invalid_argument("config: t_scale must be log or linear");
    if (!(partition_a > 0.0 && partition_a <= partition_b && partition_b < 1.0))
        throw std::invalid_argument("config: require 0 < partition_a <= partition_b < 1");
    if (partition_axis < 0 || partition_axis >= dimension)
        throw std::invalid_argument("config: partition_axis outside trap dimension");
    if (!(odlro_threshold > 0.0 && odlro_threshold <= 1.0))
        throw std::invalid_argument("config: odlro_threshold must lie in (0, 1]");
    if (g_steps < 1) throw std::invalid_argument("config: g_steps must be >= 1");
    if (scan_points < 1) throw std::invalid_argument("config: scan_points must be >= 1");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("config: format must be csv or json");
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json doc;
    try {
        file >> doc;
    } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error("config file " + path + ": " + ex.what());
    }
    if (!doc.is_object()) throw std::runtime_error("config file root must be an object");

    const auto get = [&doc](const char* key, auto& target) {
        if (doc.contains(key)) target = doc.at(key).get<std::decay_t<decltype(target)>>();
    };
    get("dimension", config.dimension);
    get("mode_cutoff", config.mode_cutoff);
    get("solver_cutoff", config.solver_cutoff);
    get("n_particles", config.n_particles);
    get("t_min", config.t_min);
    get("t_max", config.t_max);
    get("t_steps", config.t_steps);
    get("t_scale", config.t_scale);
    get("partition_a", config.partition_a);
    get("partition_b", config.partition_b);
    get("partition_axis", config.partition_axis);
    get("odlro_threshold", config.odlro_threshold);
    get("oracle", config.oracle);
    get("g_steps", config.g_steps);
    get("scan_points", config.scan_points);
    get("out", config.out);
    get("format", config.format);
    get("seed", config.seed);

    for (const auto& [key, value] : doc.items()) {
        static const char* known[] = {
            "dimension", "mode_cutoff", "solver_cutoff", "n_particles", "t_min",
            "t_max", "t_steps", "t_scale", "partition_a", "partition_b",
            "partition_axis", "odlro_threshold", "oracle", "g_steps",
            "scan_points", "out", "format", "seed"};
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw std::runtime_error("config file: unknown key '" + key + "'");
    }
}

RunConfig load_config(const std::optional<std::string>& config_path) {
    RunConfig config;
    if (config_path) {
        apply_config_file(config, *config_path);
    } else if (const char* env = std::getenv("ODLRO_LAB_CONFIG"); env && *env) {
        apply_config_file(config, env);
    }
    return config;
}

std::string effective_config_json(const RunConfig& c) {
    nlohmann::ordered_json doc;
    doc["dimension"] = c.dimension;
    doc["mode_cutoff"] = c.mode_cutoff;
    doc["solver_cutoff"] = c.solver_cutoff;
    doc["n_particles"] = c.n_particles;
    doc["t_min"] = c.t_min;
    doc["t_max"] = c.t_max;
    doc["t_steps"] = c.t_steps;
    doc["t_scale"] = c.t_scale;
    doc["partition_a"] = c.partition_a;
    doc["partition_b"] = c.partition_b;
    doc["partition_axis"] = c.partition_axis;
    doc["odlro_threshold"] = c.odlro_threshold;
    doc["oracle"] = c.oracle;
    doc["g_steps"] = c.g_steps;
    doc["scan_points"] = c.scan_points;
    doc["out"] = c.out;
    doc["format"] = c.format;
    doc["seed"] = c.seed;
    return doc.dump();
}

}  // namespace odlro_lab
