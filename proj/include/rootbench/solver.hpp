// solver.hpp
// Uniform-sampling solvers over a fixed lattice with strict per-time
// evaluation budgets.
//
//   Method A: best of a random lattice subsample (no local search).
//   Method B: Method A followed by a budgeted compass search.
//   Method C: full lattice, argmax of the neighborhood-averaged values.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "rootbench/grid.hpp"
#include "rootbench/kernels.hpp"
#include "rootbench/rng.hpp"
#include "rootbench/trajectory.hpp"

namespace rootbench {

enum class Method { A, B, C };

std::string_view to_string(Method method);

/// Per-time evaluation budget.
struct BudgetLedger {
    std::size_t n_eval = 2500;  // lattice size and hard per-time cap
    std::size_t n_loc = 200;    // local search share (Method B)
    std::size_t n_sub = 2300;   // lattice points sampled per time (Methods A and B)

    /// Throws std::invalid_argument when the budget rules are violated for
    /// the given method (B needs n_sub + n_loc <= n_eval).
    void validate(Method method) const;
};

/// Chosen solution per time instant with its current-time value and cost.
class SolutionSeries {
public:
    explicit SolutionSeries(int dim) : dim_(dim) {}

    void push(std::span<const double> x, double value, std::size_t evaluations);

    int dim() const { return dim_; }
    int horizon() const { return static_cast<int>(values_.size()); }
    /// t is 1-based.
    std::span<const double> point(int t) const;
    double value(int t) const { return values_.at(static_cast<std::size_t>(t - 1)); }
    std::size_t evaluations(int t) const { return evaluations_.at(static_cast<std::size_t>(t - 1)); }

private:
    int dim_;
    std::vector<double> points_;
    std::vector<double> values_;
    std::vector<std::size_t> evaluations_;
};

/// CSV with columns t, x1..xD, value, evaluations.
void write_csv(std::ostream& out, const SolutionSeries& series);

/// Sorted uniformly random subset of {0, ..., total-1} of the given size.
std::vector<std::size_t> subsample_indices(RngState& rng, std::size_t total, std::size_t count);

/// Index of the largest value, lowest index on ties. Throws on empty input.
std::size_t select_best(std::span<const double> values);

struct LocalSearchResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t evaluations = 0;
};

/// Compass search: probe +-step along each axis (clipped into the box), move
/// to the best strictly improving probe, halve the step when none improves.
/// Every probe counts against the budget; probes that clip back onto the
/// current point are skipped. start_value must be f(x0).
LocalSearchResult local_search(std::span<const double> x0, double start_value, const Objective& f,
                               std::size_t budget, const Box& box, double initial_step);

/// Methods A (local_search = false) and B (true).
SolutionSeries solve_tmo(const TimeObjective& objective, int horizon, const Lattice& lattice,
                         const BudgetLedger& ledger, RngState& rng, bool use_local_search,
                         Execution exec = Execution::serial);

/// Method C. Every time instant evaluates the full lattice once and appends
/// the values to the grid history.
SolutionSeries solve_robust(const TimeObjective& objective, int horizon, GridSample& grid,
                            const NeighborTable& neighbors, Execution exec = Execution::serial);

SolutionSeries solve_robust(const TimeObjective& objective, int horizon, GridSample& grid, double radius,
                            DistanceUnits units = DistanceUnits::coordinate,
                            DistanceNorm norm = DistanceNorm::euclidean, Execution exec = Execution::serial);

/// Exact optimum per time instant (used for sanity rows, never by a solver).
SolutionSeries solve_oracle(const Trajectory& trajectory);

}  // namespace rootbench
