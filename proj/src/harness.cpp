#include "rootbench/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <stdexcept>

#include <omp.h>

namespace rootbench {

const MetricSummary* ExperimentReport::try_find(const std::string& metric, double parameter) const {
    for (const auto& m : metrics)
        if (m.metric == metric && m.parameter == parameter) return &m;
    return nullptr;
}

const MetricSummary& ExperimentReport::find(const std::string& metric, double parameter) const {
    if (const auto* m = try_find(metric, parameter)) return *m;
    throw std::out_of_range("report has no metric " + metric + "(" + format_double(parameter) + ")");
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kBlock = 64;

SolutionSeries solve(const ExperimentConfig& config, const Trajectory& trajectory, RngState& rng,
                     const Lattice& lattice, const NeighborTable* neighbors) {
    const auto objective = trajectory.objective();
    switch (config.method) {
        case Method::A:
            return solve_tmo(objective, config.horizon, lattice, config.budget, rng, false);
        case Method::B:
            return solve_tmo(objective, config.horizon, lattice, config.budget, rng, true);
        case Method::C: {
            GridSample grid(lattice);
            return solve_robust(objective, config.horizon, grid, *neighbors);
        }
    }
    throw std::logic_error("unknown method");
}

ReplicationResult score(const ExperimentConfig& config, const Trajectory& trajectory, SolutionSeries solution) {
    const int horizon = config.horizon;
    const auto T = static_cast<std::size_t>(horizon);
    ReplicationResult r;
    r.value.resize(T);
    r.optimum.resize(T);
    r.averaged.assign(config.metrics.windows.size(), std::vector<double>(T, kNaN));
    r.survival.assign(config.metrics.thresholds.size(), std::vector<int>(T, 0));
    r.censored.assign(config.metrics.thresholds.size(), std::vector<unsigned char>(T, 0));

    std::vector<double> future;
    for (int t = 1; t <= horizon; ++t) {
        const auto i = static_cast<std::size_t>(t - 1);
        const auto x = solution.point(t);
        future.clear();
        const int last = config.metrics.lookahead > 0 ? t + config.metrics.lookahead - 1 : horizon;
        for (int s = t; s <= last; ++s) future.push_back(trajectory.value_unchecked(s, x));
        r.value[i] = future[0];
        r.optimum[i] = trajectory.optimum(t).value;

        for (std::size_t w = 0; w < config.metrics.windows.size(); ++w) {
            const auto window = static_cast<std::size_t>(config.metrics.windows[w]);
            if (window > future.size()) continue;
            double sum = 0.0;
            for (std::size_t s = 0; s < window; ++s) sum += future[s];
            r.averaged[w][i] = sum / static_cast<double>(window);
        }
        for (std::size_t k = 0; k < config.metrics.thresholds.size(); ++k) {
            const double threshold = config.metrics.thresholds[k];
            const auto it = std::find_if(future.begin(), future.end(), [threshold](double v) { return v <= threshold; });
            r.survival[k][i] = static_cast<int>(it - future.begin());
            r.censored[k][i] = it == future.end() ? 1 : 0;
        }
    }
    r.solution = std::move(solution);
    return r;
}

struct Accumulator {
    MetricSummary summary;
    std::vector<double> time_sum;
    std::vector<double> time_censored;

    Accumulator(std::string metric, double parameter, int t_first, int t_last, int horizon) {
        summary.metric = std::move(metric);
        summary.parameter = parameter;
        summary.t_first = t_first;
        summary.t_last = t_last;
        time_sum.assign(static_cast<std::size_t>(horizon), 0.0);
        time_censored.assign(static_cast<std::size_t>(horizon), 0.0);
    }

    // values[t-1], censored flags optional.
    template <class Values>
    void add(const Values& values, const std::vector<unsigned char>* censored) {
        double sum = 0.0;
        double cens = 0.0;
        for (std::size_t i = 0; i < time_sum.size(); ++i) {
            time_sum[i] += static_cast<double>(values[i]);
            if (censored) time_censored[i] += (*censored)[i];
        }
        for (int t = summary.t_first; t <= summary.t_last; ++t) {
            sum += static_cast<double>(values[static_cast<std::size_t>(t - 1)]);
            if (censored) cens += (*censored)[static_cast<std::size_t>(t - 1)];
        }
        const double n = summary.t_last - summary.t_first + 1;
        summary.per_replication.push_back(sum / n);
        summary.per_replication_censored.push_back(cens / n);
    }

    MetricSummary finish() {
        const double reps = static_cast<double>(summary.per_replication.size());
        summary.per_time.resize(time_sum.size());
        summary.per_time_censored.resize(time_sum.size());
        for (std::size_t i = 0; i < time_sum.size(); ++i) {
            summary.per_time[i] = time_sum[i] / reps;
            summary.per_time_censored[i] = time_censored[i] / reps;
        }
        double sum = 0.0;
        double cens = 0.0;
        for (std::size_t r = 0; r < summary.per_replication.size(); ++r) {
            sum += summary.per_replication[r];
            cens += summary.per_replication_censored[r];
        }
        summary.mean = sum / reps;
        summary.censored_fraction = cens / reps;
        double ss = 0.0;
        for (double v : summary.per_replication) ss += (v - summary.mean) * (v - summary.mean);
        summary.std_error = reps > 1 ? std::sqrt(ss / (reps - 1.0) / reps) : 0.0;
        return std::move(summary);
    }
};

ReplicationResult replicate(const ExperimentConfig& config, std::size_t replication, const Lattice& lattice,
                            const NeighborTable* neighbors) {
    RngState env_rng = stream_for(config.seed, replication, Stream::environment);
    RngState solver_rng = stream_for(config.seed, replication, Stream::solver);
    const int extra = std::max(0, config.metrics.lookahead - 1);
    const auto trajectory = Trajectory::generate(config.environment, config.horizon + extra, env_rng);
    auto solution = solve(config, trajectory, solver_rng, lattice, neighbors);
    return score(config, trajectory, std::move(solution));
}

}  // namespace

ReplicationResult run_replication(const ExperimentConfig& config, std::size_t replication) {
    const Lattice lattice(box_of(config.environment), config.budget.n_eval);
    std::optional<NeighborTable> neighbors;
    if (config.method == Method::C) neighbors = build_neighbors(lattice, config.radius, config.radius_units, config.radius_norm);
    return replicate(config, replication, lattice, neighbors ? &*neighbors : nullptr);
}

int resolve_workers(std::optional<int> requested) {
    if (requested && *requested > 0) return *requested;
    if (const char* env = std::getenv("ROOT_BENCH_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
        throw std::invalid_argument("ROOT_BENCH_WORKERS must be a positive integer");
    }
    return std::max(1, omp_get_max_threads());
}

ExperimentReport run_experiment(const ExperimentConfig& config, int workers) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const int horizon = config.horizon;
    const auto T = static_cast<std::size_t>(horizon);

    // Shared read-only structures, built once.
    const Lattice lattice(box_of(config.environment), config.budget.n_eval);
    std::optional<NeighborTable> neighbors;
    if (config.method == Method::C) neighbors = build_neighbors(lattice, config.radius, config.radius_units, config.radius_norm);

    const int t_lo = config.metrics.t_lo;
    const int t_hi = config.metrics.t_hi;
    std::vector<Accumulator> acc;
    acc.emplace_back("value", 0.0, t_lo, t_hi, horizon);
    acc.emplace_back("optimum", 0.0, t_lo, t_hi, horizon);
    acc.emplace_back("gap", 0.0, t_lo, t_hi, horizon);
    for (int s : config.metrics.windows) {
        const int last = config.metrics.lookahead > 0 ? t_hi : std::min(t_hi, horizon - s + 1);
        if (last < t_lo)
            throw std::invalid_argument("averaging window S = " + std::to_string(s) + " leaves no valid time in [t_lo, t_hi]");
        acc.emplace_back("f_aver", static_cast<double>(s), t_lo, last, horizon);
    }
    for (double d : config.metrics.thresholds) acc.emplace_back("f_surv", d, t_lo, t_hi, horizon);

    BudgetAudit audit;
    audit.min_per_time.assign(T, std::numeric_limits<std::size_t>::max());
    audit.max_per_time.assign(T, 0);

    std::vector<ReplicationResult> block;
    std::vector<double> gap(T);
    for (std::size_t first = 0; first < config.replications; first += kBlock) {
        const std::size_t count = std::min(kBlock, config.replications - first);
        block.assign(count, ReplicationResult{});
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
            try {
                const auto rep = first + static_cast<std::size_t>(i);
                block[static_cast<std::size_t>(i)] = replicate(config, rep, lattice, neighbors ? &*neighbors : nullptr);
            } catch (...) {
#pragma omp critical
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);

        // Sequential, in replication order.
        for (const auto& r : block) {
            for (std::size_t i = 0; i < T; ++i) {
                gap[i] = r.optimum[i] - r.value[i];
                const std::size_t spent = r.solution.evaluations(static_cast<int>(i + 1));
                audit.min_per_time[i] = std::min(audit.min_per_time[i], spent);
                audit.max_per_time[i] = std::max(audit.max_per_time[i], spent);
            }
            std::size_t a = 0;
            acc[a++].add(r.value, nullptr);
            acc[a++].add(r.optimum, nullptr);
            acc[a++].add(gap, nullptr);
            for (const auto& series : r.averaged) acc[a++].add(series, nullptr);
            for (std::size_t k = 0; k < r.survival.size(); ++k) acc[a++].add(r.survival[k], &r.censored[k]);
        }
    }

    ExperimentReport report;
    report.config = config;
    report.workers = workers;
    report.budget = std::move(audit);
    for (auto& a : acc) report.metrics.push_back(a.finish());
    // Averaged values are undefined where the window runs past T.
    for (auto& m : report.metrics)
        if (m.metric == "f_aver" && config.metrics.lookahead == 0)
            for (int t = horizon - static_cast<int>(m.parameter) + 2; t <= horizon; ++t)
                m.per_time[static_cast<std::size_t>(t - 1)] = kNaN;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace rootbench
