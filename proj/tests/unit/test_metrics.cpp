#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rootbench/grid.hpp"
#include "rootbench/metrics.hpp"
#include "rootbench/trajectory.hpp"

using namespace rootbench;

namespace {

// One fixed peak at the origin of a 1-D box whose height follows `heights`.
Trajectory scripted(const std::vector<double>& heights) {
    ConicPeaksParams p;
    p.peaks = 1;
    p.box = {-1.0, 1.0, 1};
    p.height = {0.0, 100.0};
    p.height_init = heights.front();
    Trajectory::ConicStates states;
    for (double h : heights) {
        ConicPeaksState s;
        s.box = p.box;
        s.peaks = 1;
        s.centers = {0.0};
        s.heights = {h};
        s.widths = {1.0};
        s.velocities = {1.0};
        s.sigma_height = {0.0};
        s.sigma_width = {0.0};
        states.push_back(s);
    }
    return Trajectory(p, 0, std::move(states));
}

const std::vector<double> kOrigin = {0.0};

}  // namespace

TEST_CASE("cover radius and the Lipschitz bound") {
    const Box b1{0.0, 50.0, 2};
    CHECK(cover_radius(2500, b1) == doctest::Approx(std::sqrt(2.0) * 50.0 / 98.0));
    CHECK(cover_radius(2500, b1) == doctest::Approx(0.7215).epsilon(1e-4));
    CHECK(cover_radius(2, {0.0, 1.0, 1}) == doctest::Approx(0.5));
    CHECK(lipschitz_gap_bound(6.5, 2500, b1) == doctest::Approx(4.69).epsilon(0.01 / 4.69));
    CHECK(lipschitz_gap_bound(7.0, 2500, {-25.0, 25.0, 2}) == doctest::Approx(5.05).epsilon(0.01 / 5.05));
    CHECK(lipschitz_gap_bound(0.0, 2500, b1) == 0.0);
    double last = 1e300;
    for (std::size_t k = 2; k <= 400; k *= 2) {
        const double r = cover_radius(k * k, b1);
        CHECK(r < last);
        last = r;
    }
    CHECK_THROWS_AS(cover_radius(2499, b1), std::invalid_argument);
    CHECK_THROWS_AS(cover_radius(1, b1), std::invalid_argument);
    CHECK_THROWS_AS(lipschitz_gap_bound(-1.0, 2500, b1), std::invalid_argument);
}

TEST_CASE("averaged value") {
    const auto traj = scripted({65.0, 58.5, 10.0});
    CHECK(averaged_value(traj, kOrigin, 1, 2) == doctest::Approx(61.75));
    CHECK(averaged_value(traj, kOrigin, 2, 1) == 58.5);
    CHECK_THROWS_AS(averaged_value(traj, kOrigin, 2, 3), std::out_of_range);
    CHECK_THROWS_AS(averaged_value(traj, kOrigin, 1, 0), std::invalid_argument);

    const auto flat = scripted(std::vector<double>(8, 42.0));
    for (int s = 1; s <= 8; ++s) CHECK(averaged_value(flat, kOrigin, 1, s) == 42.0);
}

TEST_CASE("survival time") {
    const auto drop = scripted({45.0, 60.0});
    CHECK(survival_time(drop, kOrigin, 1, 50.0).steps == 0);

    const auto slide = scripted({55.0, 52.0, 49.0, 70.0});
    const auto s = survival_time(slide, kOrigin, 1, 50.0);
    CHECK(s.steps == 2);
    CHECK_FALSE(s.censored);

    // Equal to the threshold counts as a drop.
    CHECK(survival_time(scripted({55.0, 50.0}), kOrigin, 1, 50.0).steps == 1);

    const auto high = scripted({60.0, 61.0, 62.0, 63.0, 64.0});
    for (int t = 1; t <= 5; ++t) {
        const auto c = survival_time(high, kOrigin, t, 50.0);
        CHECK(c.censored);
        CHECK(c.steps == 5 - t + 1);
    }
    const auto capped = survival_time(high, kOrigin, 1, 50.0, 3);
    CHECK(capped.censored);
    CHECK(capped.steps == 3);
    CHECK(survival_time(slide, kOrigin, 1, 50.0, 10).steps == 2);
    CHECK_THROWS_AS(survival_time(high, kOrigin, 6, 50.0), std::out_of_range);
}

TEST_CASE("survival is monotone in the threshold") {
    ConicPeaksParams p;
    RngState rng(4);
    const auto traj = Trajectory::generate(p, 60, rng);
    const std::vector<double> x = {25.0, 25.0};
    for (int t = 1; t <= 60; t += 3) {
        int last = 1 << 30;
        for (double th = 0.0; th <= 70.0; th += 2.5) {
            const int s = survival_time(traj, x, t, th).steps;
            REQUIRE(s <= last);
            REQUIRE(s <= 60 - t + 1);
            last = s;
        }
    }
}

TEST_CASE("cover lemma on random states and the adversarial cone") {
    ConicPeaksParams p;
    const Lattice lat(p.box, 2500);
    RngState rng(10);
    for (int i = 0; i < 200; ++i) {
        auto s = initial_state(p, rng);
        for (int t = 0; t < i % 7; ++t) s = advance(s, p, rng);
        const auto c = verify_cover_lemma(s, lat);
        REQUIRE(c.holds);
        REQUIRE(c.optimum - c.best_sampled <= lipschitz_gap_bound(c.lipschitz, 2500, p.box) + 1e-9);
    }

    // Widest cone at the centroid of an interior cell: every lattice point sits
    // exactly one cover radius away, so the bound is attained.
    const double h = lat.spacing();
    ConicPeaksState adv;
    adv.box = p.box;
    adv.peaks = 1;
    adv.centers = {20.5 * h, 30.5 * h};
    adv.heights = {70.0};
    adv.widths = {p.width.hi};
    adv.velocities = {1.0, 0.0};
    adv.sigma_height = {1.0};
    adv.sigma_width = {0.1};
    const auto c = verify_cover_lemma(adv, lat);
    CHECK(c.holds);
    CHECK(c.radius == doctest::Approx(cover_radius(2500, p.box)));
    CHECK(std::abs(c.slack) <= 1e-9);

    RotatingPeaksParams rp;
    const Lattice lat2(rp.box, 2500);
    for (int i = 0; i < 50; ++i) {
        const auto s = initial_state(rp, rng);
        REQUIRE(verify_cover_lemma(s, lat2).holds);
    }
}

TEST_CASE("gap report") {
    ConicPeaksParams p;
    RngState rng(2);
    const auto traj = Trajectory::generate(p, 10, rng);
    SolutionSeries fixed(2), short_series(2);
    const std::vector<double> x = {1.0, 1.0};
    for (int t = 1; t <= 10; ++t) fixed.push(x, traj.value(t, x), 1);
    short_series.push(x, 0.0, 1);
    const auto g = gap_report(fixed, traj, 3, 7);
    double sum = 0.0;
    for (int t = 1; t <= 10; ++t) {
        const double expect = traj.optimum(t).value - traj.value(t, x);
        CHECK(g.gaps[static_cast<std::size_t>(t - 1)] == expect);
        CHECK(expect >= 0.0);
        if (t >= 3 && t <= 7) sum += expect;
    }
    CHECK(g.mean == doctest::Approx(sum / 5));
    CHECK_THROWS_AS(gap_report(short_series, traj, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gap_report(fixed, traj, 5, 11), std::invalid_argument);
}
