// harness.hpp
// Seeded replication runner. Each replication derives its own environment
// and solver streams from (seed, replication), so reports depend only on
// the config, never on the worker count.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rootbench/config.hpp"

namespace rootbench {

/// One metric (e.g. f_aver with S = 2) over all replications.
struct MetricSummary {
    std::string metric;     // value, optimum, gap, f_aver, f_surv
    double parameter = 0;   // S for f_aver, threshold for f_surv, unused otherwise
    int t_first = 0;        // aggregation range actually used
    int t_last = 0;

    /// Per replication: mean over t in [t_first, t_last].
    std::vector<double> per_replication;
    std::vector<double> per_replication_censored;  // fraction of censored t (f_surv)

    /// Per time instant: mean over replications; NaN where undefined.
    std::vector<double> per_time;
    std::vector<double> per_time_censored;

    double mean = 0.0;
    double std_error = 0.0;
    double censored_fraction = 0.0;
};

struct BudgetAudit {
    std::vector<std::size_t> min_per_time;
    std::vector<std::size_t> max_per_time;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<MetricSummary> metrics;
    BudgetAudit budget;
    double seconds = 0.0;
    int workers = 1;

    /// Throws std::out_of_range naming the metric if absent.
    const MetricSummary& find(const std::string& metric, double parameter = 0.0) const;
    const MetricSummary* try_find(const std::string& metric, double parameter = 0.0) const;
};

/// Per-time series of one replication, before aggregation.
struct ReplicationResult {
    SolutionSeries solution{1};
    std::vector<double> value;
    std::vector<double> optimum;
    std::vector<std::vector<double>> averaged;           // [window][t]; NaN past the horizon
    std::vector<std::vector<int>> survival;              // [threshold][t]
    std::vector<std::vector<unsigned char>> censored;    // [threshold][t]
};

/// Runs a single replication (environment, solver, a-posteriori scoring).
ReplicationResult run_replication(const ExperimentConfig& config, std::size_t replication);

/// Resolves the worker count: explicit value if positive, else the
/// ROOT_BENCH_WORKERS environment variable, else the OpenMP default.
int resolve_workers(std::optional<int> requested);

ExperimentReport run_experiment(const ExperimentConfig& config, int workers = 1);

}  // namespace rootbench
