#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rootbench/grid.hpp"
#include "rootbench/kernels.hpp"
#include "rootbench/metrics.hpp"
#include "rootbench/solver.hpp"
#include "rootbench/trajectory.hpp"

using namespace rootbench;

namespace {

const Box kBox{0.0, 50.0, 2};

double cone(std::span<const double> x, double cx, double cy, double h, double w) {
    return h - w * std::hypot(x[0] - cx, x[1] - cy);
}

// Brute-force neighbor count of lattice point n against every other point.
std::size_t brute_neighbors(const Lattice& lat, std::size_t n, double radius, bool index_units, bool max_norm) {
    const double unit = index_units ? lat.spacing() : 1.0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < lat.size(); ++j) {
        double d = 0.0;
        for (int a = 0; a < lat.dim(); ++a) {
            const double delta = std::abs(lat.point(n)[static_cast<std::size_t>(a)] - lat.point(j)[static_cast<std::size_t>(a)]) / unit;
            d = max_norm ? std::max(d, delta) : d + delta * delta;
        }
        if (!max_norm) d = std::sqrt(d);
        // Index distances are integers up to rounding of the coordinate difference.
        if (index_units) d = std::round(d * 1e9) / 1e9;
        count += d <= radius;
    }
    return count;
}

}  // namespace

TEST_CASE("lattice construction") {
    const Lattice corners({0.0, 1.0, 2}, 4);
    std::set<std::pair<double, double>> got;
    for (std::size_t n = 0; n < corners.size(); ++n) got.insert({corners.point(n)[0], corners.point(n)[1]});
    CHECK(got == std::set<std::pair<double, double>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

    const Lattice lat(kBox, 2500);
    CHECK(lat.per_axis() == 50);
    CHECK(lat.spacing() == doctest::Approx(50.0 / 49.0));
    CHECK(lat.point(0)[0] == 0.0);
    CHECK(lat.point(2499)[0] == 50.0);
    CHECK(lat.point(2499)[1] == 50.0);
    CHECK(lat.point(1)[0] == doctest::Approx(50.0 / 49.0));
    CHECK(lat.point(50)[1] == doctest::Approx(50.0 / 49.0));

    CHECK_THROWS_AS(Lattice(kBox, 2499), std::invalid_argument);
    CHECK_THROWS_AS(Lattice(kBox, 1), std::invalid_argument);
    CHECK(lattice_root(2500, 2) == 50);
    CHECK(lattice_root(125, 3) == 5);
    CHECK(lattice_root(10, 2) == 0);
}

TEST_CASE("the lattice covers the box within the cover radius") {
    const Lattice lat(kBox, 2500);
    const double r = cover_radius(2500, kBox);
    RngState rng(3);
    for (int i = 0; i < 20000; ++i) {
        const double x = sample_uniform(rng, 0, 50), y = sample_uniform(rng, 0, 50);
        double best = 1e300;
        for (std::size_t n = 0; n < lat.size(); ++n)
            best = std::min(best, std::hypot(x - lat.point(n)[0], y - lat.point(n)[1]));
        REQUIRE(best <= r + 1e-12);
    }
}

TEST_CASE("subsample indices") {
    RngState rng(1);
    auto all = subsample_indices(rng, 10, 10);
    CHECK(all == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(subsample_indices(rng, 10, 0).empty());
    CHECK_THROWS_AS(subsample_indices(rng, 10, 11), std::invalid_argument);

    std::vector<double> hits(2500, 0.0);
    const int draws = 2000;
    for (int i = 0; i < draws; ++i) {
        const auto s = subsample_indices(rng, 2500, 2300);
        REQUIRE(s.size() == 2300);
        REQUIRE(std::set<std::size_t>(s.begin(), s.end()).size() == 2300);
        REQUIRE(s.back() < 2500);
        for (auto k : s) hits[k] += 1.0;
    }
    // Inclusion probability 0.92 for every index; 6 sigma band.
    const double sd = std::sqrt(draws * 0.92 * 0.08);
    for (double h : hits) REQUIRE(std::abs(h - draws * 0.92) < 6 * sd);
}

TEST_CASE("select best") {
    const std::vector<double> a = {1, 3, 2}, b = {5, 5}, c = {4, 4, 4, 4};
    CHECK(select_best(a) == 1);
    CHECK(select_best(b) == 0);
    CHECK(select_best(c) == 0);
    CHECK_THROWS(select_best(std::vector<double>{}));
}

TEST_CASE("local search") {
    const Objective f = [](std::span<const double> x) { return cone(x, 10, 10, 50, 6); };
    const std::vector<double> x0 = {9, 9};
    const double start = f(x0);

    const auto none = local_search(x0, start, f, 0, kBox, 50.0 / 49.0);
    CHECK(none.x == x0);
    CHECK(none.evaluations == 0);
    CHECK(none.value == start);

    const auto r = local_search(x0, start, f, 200, kBox, 50.0 / 49.0);
    CHECK(r.value >= 49.9);
    CHECK(r.evaluations <= 200);
    CHECK(r.value == f(r.x));

    // Never worse than the start, even when nothing improves.
    RngState rng(4);
    for (int i = 0; i < 200; ++i) {
        const std::vector<double> p = {sample_uniform(rng, 0, 50), sample_uniform(rng, 0, 50)};
        const Objective g = [&](std::span<const double> x) {
            return std::max(cone(x, 5, 45, 60, 3), cone(x, 40, 12, 55, 9));
        };
        const auto s = local_search(p, g(p), g, 50, kBox, 1.0);
        REQUIRE(s.value >= g(p));
        REQUIRE(s.evaluations <= 50);
        REQUIRE(kBox.contains(s.x));
    }

    // A corner start spends nothing on the clipped-away probes.
    int calls = 0;
    const Objective counted = [&](std::span<const double> x) {
        ++calls;
        return f(x);
    };
    const std::vector<double> corner = {0, 0};
    const auto c = local_search(corner, f(corner), counted, 200, kBox, 1.0);
    CHECK(static_cast<int>(c.evaluations) == calls);
}

TEST_CASE("neighbor tables against brute-force enumeration") {
    const Lattice lat(kBox, 2500);
    const std::size_t interior = 25 * 50 + 25;

    const auto coord = build_neighbors(lat, 3.0, DistanceUnits::coordinate);
    const auto index = build_neighbors(lat, 3.0, DistanceUnits::index);
    const auto block = build_neighbors(lat, 3.0, DistanceUnits::index, DistanceNorm::maximum);
    CHECK(brute_neighbors(lat, interior, 3.0, false, false) == 25);
    CHECK(brute_neighbors(lat, interior, 3.0, true, false) == 29);
    CHECK(brute_neighbors(lat, interior, 3.0, true, true) == 49);
    CHECK(coord.count(interior) == 25);
    CHECK(index.count(interior) == 29);
    CHECK(block.count(interior) == 49);

    // Corners and edges lose the points outside the box.
    for (std::size_t n : {std::size_t{0}, std::size_t{49}, std::size_t{2}, std::size_t{2450}, std::size_t{1234}}) {
        CHECK(coord.count(n) == brute_neighbors(lat, n, 3.0, false, false));
        CHECK(index.count(n) == brute_neighbors(lat, n, 3.0, true, false));
        CHECK(block.count(n) == brute_neighbors(lat, n, 3.0, true, true));
    }
    CHECK(coord.count(0) == 9);

    const auto self = build_neighbors(lat, 0.5, DistanceUnits::coordinate);
    for (std::size_t n = 0; n < lat.size(); ++n) {
        REQUIRE(self.count(n) == 1);
        REQUIRE(self.indices[self.offsets[n]] == n);
    }
    CHECK_THROWS_AS(build_neighbors(lat, -1.0), std::invalid_argument);
}

TEST_CASE("neighborhood averages") {
    const Lattice lat(kBox, 2500);
    const auto table = build_neighbors(lat, 3.0);
    std::vector<double> constant(lat.size(), 7.25), out(lat.size());
    kernels::neighborhood_average_serial(table, constant, out);
    for (double v : out) REQUIRE(v == 7.25);

    RngState rng(2);
    std::vector<double> values(lat.size());
    for (double& v : values) v = sample_uniform(rng, 0, 1);
    kernels::neighborhood_average_serial(table, values, out);
    const std::size_t n = 10 * 50 + 20;
    double sum = 0.0;
    int count = 0;
    for (std::size_t j = 0; j < lat.size(); ++j)
        if (std::hypot(lat.point(n)[0] - lat.point(j)[0], lat.point(n)[1] - lat.point(j)[1]) <= 3.0) {
            sum += values[j];
            ++count;
        }
    CHECK(out[n] == doctest::Approx(sum / count).epsilon(1e-14));

    const auto self = build_neighbors(lat, 0.9);
    kernels::neighborhood_average_serial(self, values, out);
    CHECK(out == values);
}

TEST_CASE("serial and parallel kernels agree bitwise") {
    const Lattice lat(kBox, 2500);
    const Objective f = [](std::span<const double> x) {
        return std::max(cone(x, 12.3, 40.1, 61, 4.5), cone(x, 30, 7.7, 55, 2.25));
    };
    std::vector<double> a(lat.size()), b(lat.size());
    kernels::evaluate_all_serial(lat, f, a);
    kernels::evaluate_all_parallel(lat, f, b);
    CHECK(a == b);

    RngState rng(8);
    const auto idx = subsample_indices(rng, lat.size(), 2300);
    std::vector<double> c(idx.size()), d(idx.size());
    kernels::evaluate_serial(lat, idx, f, c);
    kernels::evaluate_parallel(lat, idx, f, d);
    CHECK(c == d);
    for (std::size_t i = 0; i < idx.size(); ++i) REQUIRE(c[i] == a[idx[i]]);

    for (auto units : {DistanceUnits::coordinate, DistanceUnits::index}) {
        const auto table = build_neighbors(lat, 3.0, units);
        std::vector<double> s(lat.size()), p(lat.size());
        kernels::neighborhood_average_serial(table, a, s);
        kernels::neighborhood_average_parallel(table, a, p);
        CHECK(s == p);
    }
}

TEST_CASE("grid sample history") {
    GridSample g(Lattice(kBox, 4));
    CHECK(g.observed() == 0);
    g.append({1, 2, 3, 4});
    g.append({5, 6, 7, 8});
    CHECK(g.observed() == 2);
    CHECK(g.values(1)[2] == 3);
    CHECK_THROWS_AS(g.values(3), std::out_of_range);
    CHECK_THROWS_AS(g.append({1, 2}), std::invalid_argument);
}

TEST_CASE("budget ledger rules") {
    BudgetLedger ok;
    CHECK_NOTHROW(ok.validate(Method::B));
    BudgetLedger big{2500, 3000, 2300};
    CHECK_THROWS_AS(big.validate(Method::B), std::invalid_argument);
    BudgetLedger over{2500, 300, 2300};
    CHECK_THROWS_AS(over.validate(Method::B), std::invalid_argument);
    CHECK_NOTHROW(over.validate(Method::A));
}

TEST_CASE("Methods A and B budgets and gaps on a real trajectory") {
    ConicPeaksParams p;
    RngState env(21), sa(22), sb(22);
    const auto traj = Trajectory::generate(p, 40, env);
    const Lattice lat(p.box, 2500);
    const BudgetLedger ledger;
    const auto a = solve_tmo(traj.objective(), 40, lat, ledger, sa, false);
    const auto b = solve_tmo(traj.objective(), 40, lat, ledger, sb, true);
    for (int t = 1; t <= 40; ++t) {
        CHECK(a.evaluations(t) == 2300);
        CHECK(b.evaluations(t) >= 2300);
        CHECK(b.evaluations(t) <= 2500);
        CHECK(a.value(t) == traj.value(t, a.point(t)));
        // Same subsample stream, so B starts from A's point and never loses.
        CHECK(b.value(t) >= a.value(t));
        CHECK(traj.optimum(t).value >= b.value(t));
    }
    std::ostringstream csv;
    write_csv(csv, a);
    CHECK(csv.str().rfind("t,x1,x2,value,evaluations\n1,", 0) == 0);
}

TEST_CASE("static environment gives a constant full-grid solution") {
    const TimeObjective f = [](int, std::span<const double> x) { return cone(x, 17.2, 33.9, 50, 6); };
    const Lattice lat(kBox, 2500);
    RngState rng(1);
    const auto s = solve_tmo(f, 15, lat, {2500, 0, 2500}, rng, false);
    for (int t = 2; t <= 15; ++t) {
        CHECK(s.point(t)[0] == s.point(1)[0]);
        CHECK(s.point(t)[1] == s.point(1)[1]);
    }
}

TEST_CASE("single cone on a lattice point") {
    const Lattice lat(kBox, 2601);  // spacing 1
    const TimeObjective f = [](int, std::span<const double> x) { return cone(x, 25, 25, 50, 6); };
    RngState rng(1);
    const auto a = solve_tmo(f, 3, lat, {2601, 0, 2601}, rng, false);
    CHECK(a.point(2)[0] == 25.0);
    CHECK(a.point(2)[1] == 25.0);

    GridSample grid(lat);
    const auto c = solve_robust(f, 3, grid, 3.0);
    CHECK(c.point(3)[0] == 25.0);
    CHECK(c.point(3)[1] == 25.0);
    CHECK(c.evaluations(1) == 2601);
    CHECK(grid.observed() == 3);
}

TEST_CASE("Method C with a self-only neighborhood equals the full-grid argmax") {
    RotatingPeaksParams p;
    RngState env(5);
    const auto traj = Trajectory::generate(p, 25, env);
    const Lattice lat(p.box, 2500);
    RngState rng(1);
    const auto a = solve_tmo(traj.objective(), 25, lat, {2500, 0, 2500}, rng, false);
    for (double radius : {0.0, 0.5}) {
        GridSample grid(lat);
        const auto c = solve_robust(traj.objective(), 25, grid, radius);
        for (int t = 1; t <= 25; ++t) {
            REQUIRE(c.point(t)[0] == a.point(t)[0]);
            REQUIRE(c.point(t)[1] == a.point(t)[1]);
            REQUIRE(c.evaluations(t) == 2500);
        }
    }
    GridSample serial(lat), parallel(lat);
    const auto cs = solve_robust(traj.objective(), 25, serial, 3.0, DistanceUnits::index, DistanceNorm::maximum,
                                 Execution::serial);
    const auto cp = solve_robust(traj.objective(), 25, parallel, 3.0, DistanceUnits::index, DistanceNorm::maximum,
                                 Execution::parallel);
    for (int t = 1; t <= 25; ++t) CHECK(cs.point(t)[0] == cp.point(t)[0]);
}

TEST_CASE("oracle series has zero gap") {
    ConicPeaksParams p;
    RngState env(13);
    const auto traj = Trajectory::generate(p, 30, env);
    const auto o = solve_oracle(traj);
    const auto g = gap_report(o, traj, 1, 30);
    for (double v : g.gaps) CHECK(v == 0.0);
    CHECK(g.mean == 0.0);
}
