// metrics.hpp
// A-posteriori scoring of solution series against the true trajectory, and
// the sampling-density bound for Lipschitz objectives.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rootbench/benchmark.hpp"
#include "rootbench/grid.hpp"
#include "rootbench/solver.hpp"
#include "rootbench/trajectory.hpp"

namespace rootbench {

struct MetricsConfig {
    std::vector<int> windows;        // S values for the averaged objective
    std::vector<double> thresholds;  // survival thresholds
    int t_lo = 20;
    int t_hi = 100;
    /// 0: scoring stops at the horizon T. Otherwise the environment is
    /// simulated lookahead - 1 steps past T and each time instant sees at
    /// most `lookahead` future states (survival is censored at that value).
    int lookahead = 0;

    /// Throws std::invalid_argument if a window is < 1 or the range falls outside [1, horizon].
    void validate(int horizon) const;
};

/// (1/S) sum_{s<S} f(x; alpha(t+s)). Throws std::out_of_range if t + S - 1 > T.
double averaged_value(const Trajectory& trajectory, std::span<const double> x, int t, int window);

struct Survival {
    int steps = 0;
    bool censored = false;
};

/// Smallest s >= 0 with f(x; alpha(t+s)) <= threshold. When the value stays
/// above the threshold through T, returns T - t + 1 flagged as censored.
/// A positive `limit` inspects at most that many states.
Survival survival_time(const Trajectory& trajectory, std::span<const double> x, int t, double threshold,
                       int limit = 0);

/// Radius of the cover formed by a lattice of n points over the box:
/// sqrt(D) (hi - lo) / (2 (n^{1/D} - 1)). n must be k^D with k >= 2.
double cover_radius(std::size_t n, const Box& box);

/// Guaranteed gap f* - f(best lattice point) for an L-Lipschitz objective.
double lipschitz_gap_bound(double lipschitz, std::size_t n, const Box& box);

struct CoverCheck {
    bool holds = false;
    double best_sampled = 0.0;
    double optimum = 0.0;
    double lipschitz = 0.0;
    double radius = 0.0;
    /// best_sampled - (optimum - lipschitz * radius); non-negative when the lemma holds.
    double slack = 0.0;
};

/// Checks max_n f(x_n) >= f* - L * radius with L the state's exact Lipschitz constant.
CoverCheck verify_cover_lemma(const ConicPeaksState& state, const Lattice& lattice);
CoverCheck verify_cover_lemma(const RotatingPeaksState& state, const Lattice& lattice);

struct GapReport {
    std::vector<double> gaps;  // per t, index t - 1
    double mean = 0.0;         // over [t_lo, t_hi]
};

/// f*(t) - f(x(t); alpha(t)) per time instant.
GapReport gap_report(const SolutionSeries& series, const Trajectory& trajectory, int t_lo, int t_hi);

}  // namespace rootbench
