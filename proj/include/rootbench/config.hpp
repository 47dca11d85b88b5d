// config.hpp
// Experiment configuration as a flat `key = value` text file.
//
// Keys: benchmark, method, M, D, x_min, x_max, h_min, h_max, w_min, w_max,
// sigma_h, sigma_w, n_eval, n_loc, n_sub, T, replications, seed, S, delta,
// t_lo, t_hi, lookahead, radius, radius_units, radius_norm, output_dir; benchmark 1 only: h_init,
// w_init, lambda, s, sigma_draw; benchmark 2 only: theta_min, theta_max, sigma_theta,
// theta_init, center_init.
//
// For benchmark 1, sigma_h and sigma_w accept either a number or U(lo, hi).
// S and delta are comma-separated lists. Omitted keys take the published
// defaults of the selected benchmark.
#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rootbench/grid.hpp"
#include "rootbench/metrics.hpp"
#include "rootbench/solver.hpp"
#include "rootbench/trajectory.hpp"

namespace rootbench {

class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& key, const std::string& message)
        : std::runtime_error(key.empty() ? message : "config key '" + key + "': " + message), key_(key) {}

    const std::string& key() const { return key_; }

private:
    std::string key_;
};

struct ExperimentConfig {
    EnvironmentParams environment = ConicPeaksParams{};
    Method method = Method::B;
    BudgetLedger budget{};
    int horizon = 100;
    std::size_t replications = 5000;
    std::uint64_t seed = 1;
    MetricsConfig metrics{default_windows(), {40.0, 50.0}, 20, 100, 0};
    double radius = 3.0;
    DistanceUnits radius_units = DistanceUnits::coordinate;
    DistanceNorm radius_norm = DistanceNorm::euclidean;
    std::string output_dir = "out";

    BenchmarkKind kind() const { return kind_of(environment); }

    /// Throws ConfigError naming the offending key.
    void validate() const;

    /// S = 1, ..., 20.
    static std::vector<int> default_windows();
};

/// Published defaults for the given benchmark.
ExperimentConfig default_config(BenchmarkKind kind);

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Effective configuration in the same format parse_config reads.
std::string echo_config(const ExperimentConfig& config);

/// Benchmark parameter entries (key, value) of an environment, as used in
/// config files and trajectory headers.
std::vector<std::pair<std::string, std::string>> environment_entries(const EnvironmentParams& params);

/// Sets one benchmark parameter. Returns false if the key is not a
/// parameter of this benchmark; throws ConfigError on a bad value.
bool apply_environment_entry(EnvironmentParams& params, const std::string& key, const std::string& value);

std::string format_double(double v);

}  // namespace rootbench
