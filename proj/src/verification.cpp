#include "rootbench/verification.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "rootbench/harness.hpp"
#include "rootbench/metrics.hpp"

namespace rootbench {

namespace {

// State at a random time instant of a fresh trajectory.
template <class Params>
auto random_state(const Params& params, RngState& rng) {
    auto state = initial_state(params, rng);
    const int steps = static_cast<int>(rng.below(100));
    for (int i = 0; i < steps; ++i) state = advance(state, params, rng);
    return state;
}

template <class Params>
CheckResult check_lemma(const char* name, const Params& params, std::uint64_t seed, int states) {
    const Lattice lattice(params.box, 2500);
    int violations = 0;
    double min_slack = INFINITY;
    for (int i = 0; i < states; ++i) {
        RngState rng = RngState::for_stream(seed, static_cast<std::uint64_t>(i), 20);
        const auto check = verify_cover_lemma(random_state(params, rng), lattice);
        violations += check.holds ? 0 : 1;
        min_slack = std::min(min_slack, check.slack);
    }
    return {name, violations == 0, fmt::format("{} states, {} violations, min slack {:.6g}", states, violations, min_slack)};
}

template <class Params>
CheckResult check_dominance(const char* name, const Params& params, std::uint64_t seed, int states) {
    int violations = 0;
    std::vector<double> x(static_cast<std::size_t>(params.box.dim));
    for (int i = 0; i < states; ++i) {
        RngState rng = RngState::for_stream(seed, static_cast<std::uint64_t>(i), 21);
        const auto state = random_state(params, rng);
        const auto opt = optimum(state);
        if (value(state, opt.x) != opt.value) ++violations;
        for (int k = 0; k < 100; ++k) {
            for (double& c : x) c = sample_uniform(rng, params.box.lo, params.box.hi);
            if (value(state, x) > opt.value) ++violations;
        }
    }
    return {name, violations == 0, fmt::format("{} states x 100 points, {} violations", states, violations)};
}

CheckResult check_dynamics(std::uint64_t seed) {
    int violations = 0;
    double worst_velocity = 0.0;
    double worst_orthogonality = 0.0;
    for (double lambda : {0.0, 0.5, 1.0}) {
        ConicPeaksParams p;
        p.lambda = lambda;
        RngState rng = RngState::for_stream(seed, static_cast<std::uint64_t>(lambda * 10), 22);
        const auto traj = Trajectory::generate(p, 100, rng);
        for (int t = 1; t <= 100; ++t) {
            const auto& s = traj.conic(t);
            for (int m = 0; m < s.peaks; ++m) {
                double n2 = 0.0;
                for (double v : s.velocity(m)) n2 += v * v;
                worst_velocity = std::max(worst_velocity, std::abs(std::sqrt(n2) - p.step) / p.step);
                if (!p.height.contains(s.heights[static_cast<std::size_t>(m)]) ||
                    !p.width.contains(s.widths[static_cast<std::size_t>(m)]) || !s.box.contains(s.center(m)))
                    ++violations;
            }
        }
    }
    RotatingPeaksParams rp;
    RngState rng = RngState::for_stream(seed, 0, 23);
    const auto traj = Trajectory::generate(rp, 100, rng);
    for (int t = 1; t <= 100; ++t) {
        const auto& s = traj.rotating(t);
        for (double h : s.heights) violations += rp.height.contains(h) ? 0 : 1;
        for (double w : s.widths) violations += rp.width.contains(w) ? 0 : 1;
        for (double a : s.angles) violations += rp.angle.contains(a) ? 0 : 1;
        for (int m = 0; m < s.peaks; ++m) violations += s.box.contains(s.center(m)) ? 0 : 1;
        const auto r = rotation_matrix(s.angles);
        const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(r.rows(), r.cols());
        worst_orthogonality = std::max({worst_orthogonality, (r.transpose() * r - id).cwiseAbs().maxCoeff(),
                                        std::abs(r.determinant() - 1.0)});
    }
    const bool ok = violations == 0 && worst_velocity <= 1e-9 && worst_orthogonality <= 1e-12;
    return {"dynamics invariants", ok,
            fmt::format("{} bound violations, velocity-norm error {:.3g}, rotation error {:.3g}", violations,
                        worst_velocity, worst_orthogonality)};
}

CheckResult check_runs(std::uint64_t seed) {
    int failures = 0;
    std::string detail;
    for (auto kind : {BenchmarkKind::conic, BenchmarkKind::rotating}) {
        for (auto method : {Method::A, Method::B, Method::C}) {
            auto config = default_config(kind);
            config.method = method;
            config.replications = 4;
            config.seed = seed;
            const auto r1 = run_experiment(config, 1);
            const auto r2 = run_experiment(config, 2);
            for (std::size_t i = 0; i < r1.metrics.size(); ++i)
                if (r1.metrics[i].per_replication != r2.metrics[i].per_replication) ++failures;
            const std::size_t n_eval = config.budget.n_eval;
            for (std::size_t t = 0; t < r1.budget.max_per_time.size(); ++t) {
                const auto lo = r1.budget.min_per_time[t];
                const auto hi = r1.budget.max_per_time[t];
                const bool ok = method == Method::A   ? lo == config.budget.n_sub && hi == config.budget.n_sub
                                : method == Method::C ? lo == n_eval && hi == n_eval
                                                      : lo >= config.budget.n_sub && hi <= n_eval;
                if (!ok) ++failures;
            }
            const auto& gap = r1.find("gap");
            for (double g : gap.per_replication)
                if (g < 0.0) ++failures;
            for (std::size_t r = 0; r < config.replications; ++r) {
                if (r1.find("f_surv", 50).per_replication[r] > r1.find("f_surv", 40).per_replication[r]) ++failures;
                if (r1.find("f_aver", 1).per_replication[r] != r1.find("value").per_replication[r]) ++failures;
            }
        }
    }
    return {"determinism, budget, gap sign, survival monotonicity", failures == 0,
            fmt::format("{} failures over 6 (benchmark, method) runs", failures)};
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed, int states) {
    std::vector<CheckResult> out;
    out.push_back(check_lemma("cover lemma, benchmark 1", ConicPeaksParams{}, seed, states));
    out.push_back(check_lemma("cover lemma, benchmark 2", RotatingPeaksParams{}, seed, states));
    out.push_back(check_dominance("oracle dominance, benchmark 1", ConicPeaksParams{}, seed, states / 10));
    out.push_back(check_dominance("oracle dominance, benchmark 2", RotatingPeaksParams{}, seed, states / 10));
    out.push_back(check_dynamics(seed));
    out.push_back(check_runs(seed));
    return out;
}

}  // namespace rootbench
