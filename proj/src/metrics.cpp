#include "rootbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rootbench {

void MetricsConfig::validate(int horizon) const {
    for (int s : windows)
        if (s < 1) throw std::invalid_argument("averaging windows must be >= 1");
    if (t_lo < 1) throw std::invalid_argument("t_lo must be >= 1");
    if (t_hi > horizon) throw std::invalid_argument("t_hi exceeds the horizon");
    if (t_lo > t_hi) throw std::invalid_argument("t_lo exceeds t_hi");
}

double averaged_value(const Trajectory& trajectory, std::span<const double> x, int t, int window) {
    if (window < 1) throw std::invalid_argument("averaging window must be >= 1");
    if (t < 1 || t + window - 1 > trajectory.horizon())
        throw std::out_of_range("averaging window [" + std::to_string(t) + ", " + std::to_string(t + window - 1) +
                                "] exceeds the horizon");
    double sum = 0.0;
    for (int s = 0; s < window; ++s) sum += trajectory.value(t + s, x);
    return sum / window;
}

Survival survival_time(const Trajectory& trajectory, std::span<const double> x, int t, double threshold,
                       int limit) {
    const int horizon = trajectory.horizon();
    if (t < 1 || t > horizon) throw std::out_of_range("survival start time outside the horizon");
    int steps = horizon - t + 1;
    if (limit > 0) steps = std::min(steps, limit);
    for (int s = 0; s < steps; ++s)
        if (trajectory.value(t + s, x) <= threshold) return {s, false};
    return {steps, true};
}

double cover_radius(std::size_t n, const Box& box) {
    box.validate();
    const std::size_t k = lattice_root(n, box.dim);
    if (k < 2) throw std::invalid_argument("cover radius needs n = k^D with k >= 2");
    return std::sqrt(static_cast<double>(box.dim)) * box.extent() / (2.0 * static_cast<double>(k - 1));
}

double lipschitz_gap_bound(double lipschitz, std::size_t n, const Box& box) {
    if (lipschitz < 0.0) throw std::invalid_argument("Lipschitz constant must be non-negative");
    return lipschitz * cover_radius(n, box);
}

namespace {

template <class State>
CoverCheck check_cover(const State& state, const Lattice& lattice) {
    CoverCheck c;
    c.best_sampled = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < lattice.size(); ++n)
        c.best_sampled = std::max(c.best_sampled, value_unchecked(state, lattice.point(n)));
    c.optimum = optimum(state).value;
    c.lipschitz = lipschitz_constant(state);
    c.radius = cover_radius(lattice.size(), lattice.box());
    c.slack = c.best_sampled - (c.optimum - c.lipschitz * c.radius);
    // Rounding in the distance computation may undershoot an exactly tight bound.
    c.holds = c.slack >= -1e-9 * std::max(1.0, std::abs(c.optimum));
    return c;
}

}  // namespace

CoverCheck verify_cover_lemma(const ConicPeaksState& state, const Lattice& lattice) {
    return check_cover(state, lattice);
}

CoverCheck verify_cover_lemma(const RotatingPeaksState& state, const Lattice& lattice) {
    return check_cover(state, lattice);
}

GapReport gap_report(const SolutionSeries& series, const Trajectory& trajectory, int t_lo, int t_hi) {
    if (series.horizon() != trajectory.horizon())
        throw std::invalid_argument("solution series and trajectory have different horizons");
    if (t_lo < 1 || t_hi > trajectory.horizon() || t_lo > t_hi)
        throw std::invalid_argument("invalid gap time range");
    GapReport r;
    r.gaps.reserve(static_cast<std::size_t>(trajectory.horizon()));
    double sum = 0.0;
    for (int t = 1; t <= trajectory.horizon(); ++t) {
        const double gap = trajectory.optimum(t).value - trajectory.value(t, series.point(t));
        r.gaps.push_back(gap);
        if (t >= t_lo && t <= t_hi) sum += gap;
    }
    r.mean = sum / (t_hi - t_lo + 1);
    return r;
}

}  // namespace rootbench
