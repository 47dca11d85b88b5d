#include "rootbench/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

namespace rootbench {

std::string_view to_string(Method method) {
    switch (method) {
        case Method::A: return "A";
        case Method::B: return "B";
        case Method::C: return "C";
    }
    return "?";
}

void BudgetLedger::validate(Method method) const {
    if (n_eval == 0) throw std::invalid_argument("n_eval must be positive");
    if (n_sub > n_eval) throw std::invalid_argument("n_sub exceeds n_eval");
    if (n_loc > n_eval) throw std::invalid_argument("n_loc exceeds n_eval");
    if (method == Method::B && n_sub + n_loc > n_eval)
        throw std::invalid_argument("n_sub + n_loc exceeds n_eval");
    if (method != Method::C && n_sub == 0) throw std::invalid_argument("n_sub must be positive");
}

void SolutionSeries::push(std::span<const double> x, double value, std::size_t evaluations) {
    if (x.size() != static_cast<std::size_t>(dim_)) throw std::invalid_argument("solution has wrong dimension");
    points_.insert(points_.end(), x.begin(), x.end());
    values_.push_back(value);
    evaluations_.push_back(evaluations);
}

std::span<const double> SolutionSeries::point(int t) const {
    if (t < 1 || t > horizon()) throw std::out_of_range("solution time out of range");
    return {points_.data() + static_cast<std::size_t>(t - 1) * dim_, static_cast<std::size_t>(dim_)};
}

void write_csv(std::ostream& out, const SolutionSeries& series) {
    out << 't';
    for (int d = 1; d <= series.dim(); ++d) out << ",x" << d;
    out << ",value,evaluations\n";
    for (int t = 1; t <= series.horizon(); ++t) {
        out << t;
        for (double c : series.point(t)) out << ',' << fmt::format("{:.17g}", c);
        out << ',' << fmt::format("{:.17g}", series.value(t)) << ',' << series.evaluations(t) << '\n';
    }
}

std::vector<std::size_t> subsample_indices(RngState& rng, std::size_t total, std::size_t count) {
    if (count > total)
        throw std::invalid_argument("cannot draw " + std::to_string(count) + " of " + std::to_string(total));
    std::vector<std::size_t> pool(total);
    for (std::size_t i = 0; i < total; ++i) pool[i] = i;
    if (count == total) return pool;
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < count; ++i) std::swap(pool[i], pool[i + rng.below(total - i)]);
    std::vector<unsigned char> chosen(total, 0);
    for (std::size_t i = 0; i < count; ++i) chosen[pool[i]] = 1;
    std::vector<std::size_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < total; ++i)
        if (chosen[i]) out.push_back(i);
    return out;
}

std::size_t select_best(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("select_best: no values");
    return static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
}

LocalSearchResult local_search(std::span<const double> x0, double start_value, const Objective& f,
                               std::size_t budget, const Box& box, double initial_step) {
    LocalSearchResult res{std::vector<double>(x0.begin(), x0.end()), start_value, 0};
    const auto dim = x0.size();
    std::vector<double> probe(dim);
    std::vector<double> best_probe(dim);
    double step = initial_step;
    const double min_step = box.extent() * 1e-13;
    while (res.evaluations < budget && step > min_step) {
        double best = res.value;
        bool improved = false;
        for (std::size_t d = 0; d < dim && res.evaluations < budget; ++d) {
            for (double sign : {1.0, -1.0}) {
                if (res.evaluations >= budget) break;
                probe = res.x;
                probe[d] = std::clamp(probe[d] + sign * step, box.lo, box.hi);
                if (probe[d] == res.x[d]) continue;
                const double v = f(probe);
                ++res.evaluations;
                if (v > best) {
                    best = v;
                    best_probe = probe;
                    improved = true;
                }
            }
        }
        if (improved) {
            res.x = best_probe;
            res.value = best;
        } else {
            step *= 0.5;
        }
    }
    return res;
}

SolutionSeries solve_tmo(const TimeObjective& objective, int horizon, const Lattice& lattice,
                         const BudgetLedger& ledger, RngState& rng, bool use_local_search, Execution exec) {
    ledger.validate(use_local_search ? Method::B : Method::A);
    if (lattice.size() != ledger.n_eval)
        throw std::invalid_argument("lattice size must equal n_eval");
    SolutionSeries series(lattice.dim());
    std::vector<double> values(ledger.n_sub);
    for (int t = 1; t <= horizon; ++t) {
        const auto indices = subsample_indices(rng, lattice.size(), ledger.n_sub);
        const Objective at_t = [&objective, t](std::span<const double> x) { return objective(t, x); };
        evaluate(exec, lattice, indices, at_t, values);
        const std::size_t best = select_best(values);
        const auto x_best = lattice.point(indices[best]);
        std::size_t spent = indices.size();
        if (use_local_search) {
            const auto ls = local_search(x_best, values[best], at_t, ledger.n_loc, lattice.box(), lattice.spacing());
            spent += ls.evaluations;
            series.push(ls.x, ls.value, spent);
        } else {
            series.push(x_best, values[best], spent);
        }
        assert(spent <= ledger.n_eval);
        if (spent > ledger.n_eval) throw std::logic_error("evaluation budget exceeded");
    }
    return series;
}

SolutionSeries solve_robust(const TimeObjective& objective, int horizon, GridSample& grid,
                            const NeighborTable& neighbors, Execution exec) {
    const Lattice& lattice = grid.lattice();
    if (neighbors.size() != lattice.size()) throw std::invalid_argument("neighbor table does not match the lattice");
    SolutionSeries series(lattice.dim());
    std::vector<double> smoothed(lattice.size());
    for (int t = 1; t <= horizon; ++t) {
        std::vector<double> values(lattice.size());
        const Objective at_t = [&objective, t](std::span<const double> x) { return objective(t, x); };
        evaluate_all(exec, lattice, at_t, values);
        neighborhood_average(exec, neighbors, values, smoothed);
        const std::size_t best = select_best(smoothed);
        series.push(lattice.point(best), values[best], lattice.size());
        grid.append(std::move(values));
    }
    return series;
}

SolutionSeries solve_robust(const TimeObjective& objective, int horizon, GridSample& grid, double radius,
                            DistanceUnits units, DistanceNorm norm, Execution exec) {
    return solve_robust(objective, horizon, grid, build_neighbors(grid.lattice(), radius, units, norm), exec);
}

SolutionSeries solve_oracle(const Trajectory& trajectory) {
    SolutionSeries series(trajectory.box().dim);
    for (int t = 1; t <= trajectory.horizon(); ++t) {
        const auto opt = trajectory.optimum(t);
        series.push(opt.x, opt.value, 0);
    }
    return series;
}

}  // namespace rootbench
