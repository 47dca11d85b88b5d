// trajectory.hpp
// A realized environment sequence alpha(1), ..., alpha(T).
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "rootbench/benchmark.hpp"

namespace rootbench {

using EnvironmentParams = std::variant<ConicPeaksParams, RotatingPeaksParams>;

BenchmarkKind kind_of(const EnvironmentParams& params);
const Box& box_of(const EnvironmentParams& params);

/// Objective at time t (1-based) evaluated at x. Solvers see only this.
using TimeObjective = std::function<double(int, std::span<const double>)>;

class Trajectory {
public:
    using ConicStates = std::vector<ConicPeaksState>;
    using RotatingStates = std::vector<RotatingPeaksState>;

    /// Initializes, then advances horizon - 1 times. rng.seed() is recorded.
    static Trajectory generate(const EnvironmentParams& params, int horizon, RngState& rng);

    /// Wraps already realized states (used by the text importer).
    Trajectory(EnvironmentParams params, std::uint64_t seed, std::variant<ConicStates, RotatingStates> states);

    BenchmarkKind kind() const { return kind_of(params_); }
    const EnvironmentParams& params() const { return params_; }
    const Box& box() const { return box_of(params_); }
    std::uint64_t seed() const { return seed_; }
    int horizon() const;

    const ConicPeaksState& conic(int t) const;
    const RotatingPeaksState& rotating(int t) const;
    const std::variant<ConicStates, RotatingStates>& states() const { return states_; }

    /// Checked evaluation; t in [1, T] and x in the box.
    double value(int t, std::span<const double> x) const;
    double value_unchecked(int t, std::span<const double> x) const;
    Optimum optimum(int t) const;
    double lipschitz_constant(int t) const;

    /// Unchecked evaluator for the solvers. The trajectory must outlive it.
    TimeObjective objective() const;

    friend bool operator==(const Trajectory& a, const Trajectory& b);

private:
    std::size_t index(int t) const;

    EnvironmentParams params_;
    std::uint64_t seed_ = 0;
    std::variant<ConicStates, RotatingStates> states_;
};

}  // namespace rootbench
