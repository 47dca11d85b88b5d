#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rootbench/config.hpp"
#include "rootbench/trajectory_io.hpp"

using namespace rootbench;

TEST_CASE("empty config yields the published defaults") {
    const auto c = parse_config("");
    CHECK(c.kind() == BenchmarkKind::conic);
    const auto& p = std::get<ConicPeaksParams>(c.environment);
    CHECK(p.peaks == 5);
    CHECK(p.box.lo == 0.0);
    CHECK(p.box.hi == 50.0);
    CHECK(p.height.lo == 30.0);
    CHECK(p.height.hi == 70.0);
    CHECK(p.width.lo == 1.0);
    CHECK(p.width.hi == 12.0);
    CHECK(p.height_init == 50.0);
    CHECK(p.width_init == 6.0);
    CHECK(p.sigma_height.lo == 1.0);
    CHECK(p.sigma_height.hi == 10.0);
    CHECK(c.budget.n_eval == 2500);
    CHECK(c.budget.n_loc == 200);
    CHECK(c.budget.n_sub == 2300);
    CHECK(c.horizon == 100);
    CHECK(c.replications == 5000);
    CHECK(c.metrics.t_lo == 20);
    CHECK(c.metrics.t_hi == 100);
    CHECK(c.metrics.windows.size() == 20);
    CHECK(c.metrics.windows.front() == 1);
    CHECK(c.metrics.windows.back() == 20);
    CHECK(c.metrics.lookahead == 0);

    const auto b2 = parse_config("benchmark = bench2\n");
    const auto& r = std::get<RotatingPeaksParams>(b2.environment);
    CHECK(r.peaks == 25);
    CHECK(r.box.lo == -25.0);
    CHECK(r.box.hi == 25.0);
    CHECK(r.width.hi == 13.0);
    CHECK(r.sigma_height == 5.0);
    CHECK(r.sigma_width == 0.5);
    CHECK(r.sigma_angle == 1.0);
    CHECK(r.angle_init == 0.0);
}

TEST_CASE("config parsing") {
    const auto c = parse_config("# comment\nlambda = 0.5\nmethod = C  # trailing\nsigma_h = 3\nS = 1, 2, 6\n");
    CHECK(std::get<ConicPeaksParams>(c.environment).lambda == 0.5);
    CHECK(std::get<ConicPeaksParams>(c.environment).sigma_height.lo == 3.0);
    CHECK(std::get<ConicPeaksParams>(c.environment).sigma_height.hi == 3.0);
    CHECK(c.method == Method::C);
    CHECK(c.metrics.windows == std::vector<int>{1, 2, 6});

    const auto u = parse_config("sigma_w = U(0.2, 0.4)\nT = 50\n");
    CHECK(std::get<ConicPeaksParams>(u.environment).sigma_width.lo == 0.2);
    CHECK(u.metrics.t_hi == 50);

    const auto n = parse_config("radius_units = index\nradius_norm = maximum\nlookahead = 20\n");
    CHECK(n.radius_units == DistanceUnits::index);
    CHECK(n.radius_norm == DistanceNorm::maximum);
    CHECK(n.metrics.lookahead == 20);

    CHECK(std::get<ConicPeaksParams>(parse_config("").environment).sigma_draw == SigmaDraw::per_peak);
    CHECK(std::get<ConicPeaksParams>(parse_config("sigma_draw = per_step\n").environment).sigma_draw ==
          SigmaDraw::per_step);
}

TEST_CASE("config errors name the key") {
    auto key_of = [](const std::string& text) {
        try {
            parse_config(text);
        } catch (const ConfigError& e) {
            return e.key();
        }
        return std::string("<none>");
    };
    CHECK(key_of("n_loc = 3000\n") == "n_loc");
    CHECK(key_of("bogus = 1\n") == "bogus");
    CHECK(key_of("M = five\n") == "M");
    CHECK(key_of("M = 3\nM = 4\n") == "M");
    try {
        parse_config("lambda = 1.5\n");
        FAIL("lambda = 1.5 accepted");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("lambda") != std::string::npos);
    }
    CHECK(key_of("benchmark = bench2\nlambda = 0\n") == "lambda");
    CHECK(key_of("theta_init = 0\n") == "theta_init");
    CHECK(key_of("t_hi = 101\n") == "t_hi");
    CHECK(key_of("lookahead = 5\n") == "S");
    CHECK(key_of("radius_norm = taxicab\n") == "radius_norm");
    CHECK(key_of("sigma_draw = sometimes\n") == "sigma_draw");
    CHECK_THROWS_AS(parse_config("just words\n"), ConfigError);
}

TEST_CASE("echo round trip") {
    for (const char* text : {"lambda = 1\nmethod = A\nseed = 99\n",
                             "benchmark = bench2\ncenter_init = grid\nmethod = C\nradius = 2.5\n",
                             "sigma_h = U(2, 3)\nS = 4\ndelta = 45.5\nlookahead = 4\n",
                             "sigma_draw = per_step\nradius_norm = maximum\n"}) {
        const auto c = parse_config(text);
        const auto echoed = echo_config(c);
        CHECK(echo_config(parse_config(echoed)) == echoed);
    }
}

TEST_CASE("load config from a file") {
    const auto path = std::filesystem::temp_directory_path() / "rootbench_test_config.txt";
    {
        std::ofstream out(path);
        out << "benchmark = bench2\nreplications = 7\n";
    }
    const auto c = load_config(path);
    CHECK(c.replications == 7);
    std::filesystem::remove(path);
    CHECK_THROWS(load_config(path));
}

TEST_CASE("trajectory text round trip") {
    for (int kind = 0; kind < 2; ++kind) {
        EnvironmentParams params = ConicPeaksParams{};
        if (kind == 1) params = RotatingPeaksParams{};
        RngState rng(kind + 40);
        const auto traj = Trajectory::generate(params, 12, rng);
        std::stringstream ss;
        write_trajectory(ss, traj);
        const auto back = read_trajectory(ss);
        CHECK(back == traj);
        CHECK(back.seed() == traj.seed());
    }

    std::stringstream bad("# rootbench-trajectory 1\n# benchmark bench1\nnot a row\n");
    CHECK_THROWS_AS(read_trajectory(bad), std::runtime_error);
}
