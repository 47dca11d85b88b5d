// rootbench: command-line front end for the benchmark toolkit.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "rootbench/config.hpp"
#include "rootbench/experiments.hpp"
#include "rootbench/harness.hpp"
#include "rootbench/report_io.hpp"
#include "rootbench/stats.hpp"
#include "rootbench/trajectory_io.hpp"
#include "rootbench/verification.hpp"

namespace fs = std::filesystem;
using namespace rootbench;

namespace {

struct Globals {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> reps;
    std::optional<std::string> out;
    std::optional<int> workers;

    std::uint64_t seed_or(std::uint64_t d) const { return seed.value_or(d); }
    std::size_t reps_or(std::size_t d) const { return reps.value_or(d); }
    fs::path out_or(const std::string& d) const { return out.value_or(d); }
};

std::ofstream open_out(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    return f;
}

std::string cell(const std::optional<double>& v) { return v ? fmt::format("{:8.2f}", *v) : fmt::format("{:>8}", "-"); }

int cmd_run(const Globals& g, const std::string& config_path) {
    auto config = load_config(config_path);
    if (g.seed) config.seed = *g.seed;
    if (g.reps) config.replications = *g.reps;
    if (g.out) config.output_dir = *g.out;
    const auto report = run_experiment(config, resolve_workers(g.workers));
    write_report(report, config.output_dir);
    fmt::print("{} method {} ({} replications, t in [{}, {}])\n", to_string(config.kind()), to_string(config.method),
               config.replications, config.metrics.t_lo, config.metrics.t_hi);
    for (const auto& m : report.metrics) {
        if (m.metric == "f_aver" && m.parameter != 2 && m.parameter != 6) continue;
        const auto label = m.metric == "f_aver" || m.metric == "f_surv" ? fmt::format("{}({:g})", m.metric, m.parameter)
                                                                         : m.metric;
        fmt::print("  {:<14} {:10.4f} +- {:.4f}\n", label, m.mean, m.std_error);
    }
    fmt::print("outputs written to {}\n", config.output_dir);
    return 0;
}

int cmd_table2(const Globals& g) {
    ExperimentSuite suite(g.reps_or(5000), g.seed_or(1), resolve_workers(g.workers));
    const auto rows = table2(suite);
    fmt::print("{:<16} {:>12} {:>9} {:>9} {:>9}\n", "", "Maximal gap", "Method A", "Method B", "Method C");
    for (const auto& r : rows)
        fmt::print("{:<16} {:12.2f} {:9.2f} {:9.2f} {:9.2f}\n", to_string(r.setting), r.bound, r.gap[0], r.gap[1], r.gap[2]);
    auto f = open_out(g.out_or("out") / "table2.csv");
    write_table2_csv(f, rows);
    return 0;
}

int cmd_table3(const Globals& g) {
    ExperimentSuite suite(g.reps_or(5000), g.seed_or(1), resolve_workers(g.workers));
    const auto rows = table3(suite);
    fmt::print("{:<16} {:>35}   {:>35}\n", "", "best known (aver S=2, S=6, surv 40, 50)", "ours (Method B)");
    for (const auto& r : rows) {
        fmt::print("{:<16} {} {} {} {}   {:8.2f} {:8.2f} {:8.2f} {:8.2f}\n", to_string(r.reference.setting),
                   cell(r.reference.aver_s2), cell(r.reference.aver_s6), cell(r.reference.surv_40),
                   cell(r.reference.surv_50), r.ours[0], r.ours[1], r.ours[2], r.ours[3]);
    }
    auto f = open_out(g.out_or("out") / "table3.csv");
    write_table3_csv(f, rows);
    return 0;
}

int cmd_fig(const Globals& g, const std::string& which) {
    ExperimentSuite suite(g.reps_or(5000), g.seed_or(1), resolve_workers(g.workers));
    const auto panels = figure(suite, which);
    const fs::path dir = g.out_or("out");
    for (const auto& p : panels) {
        auto f = open_out(dir / (p.name + ".csv"));
        write_panel_csv(f, p);
        fmt::print("wrote {}\n", (dir / (p.name + ".csv")).string());
    }
    return 0;
}

int cmd_angles(const Globals& g, std::size_t draws, std::size_t bins) {
    const auto density = experiment_angle_density(draws, bins, g.seed_or(1));
    auto f = open_out(g.out_or("out") / "angles.csv");
    write_angle_density_csv(f, density);
    const auto counts = [&](const std::vector<double>& d) {
        std::vector<double> c;
        for (double v : d) c.push_back(v * static_cast<double>(draws) * 2.0 * 3.14159265358979323846 / static_cast<double>(bins));
        return c;
    };
    fmt::print("chi-square p-value, sphere sampler: {:.4g}\n", stats::chi_square_uniform_pvalue(counts(density.sphere)));
    fmt::print("chi-square p-value, square sampler: {:.4g}\n", stats::chi_square_uniform_pvalue(counts(density.square)));
    return 0;
}

int cmd_maxheight(const Globals& g, const std::vector<int>& peaks, int horizon, SigmaDraw draw) {
    std::vector<std::vector<double>> series;
    for (int m : peaks)
        series.push_back(
            experiment_max_height(m, horizon, g.reps_or(5000), g.seed_or(1), resolve_workers(g.workers), draw));
    auto f = open_out(g.out_or("out") / "maxheight.csv");
    write_max_height_csv(f, peaks, series);
    for (std::size_t i = 0; i < peaks.size(); ++i)
        fmt::print("M = {:<3} t=1: {:.3f}  t={}: {:.3f}\n", peaks[i], series[i].front(), horizon, series[i].back());
    return 0;
}

int cmd_export(const Globals& g, const std::string& config_path, const std::string& benchmark, int horizon,
               std::size_t replication, const std::string& file) {
    ExperimentConfig config = default_config(benchmark == "bench2" ? BenchmarkKind::rotating : BenchmarkKind::conic);
    if (!config_path.empty()) config = load_config(config_path);
    if (g.seed) config.seed = *g.seed;
    if (horizon > 0) config.horizon = horizon;
    RngState rng = stream_for(config.seed, replication, Stream::environment);
    const auto traj = Trajectory::generate(config.environment, config.horizon, rng);
    if (file == "-") {
        write_trajectory(std::cout, traj);
    } else {
        const fs::path path = file.empty() ? g.out_or("out") / "trajectory.txt" : fs::path(file);
        auto f = open_out(path);
        write_trajectory(f, traj);
        fmt::print("wrote {}\n", path.string());
    }
    return 0;
}

int cmd_verify(const Globals& g, int states) {
    bool ok = true;
    for (const auto& c : run_verification(g.seed_or(1), states)) {
        fmt::print("[{}] {}: {}\n", c.passed ? "PASS" : "FAIL", c.name, c.detail);
        ok = ok && c.passed;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robust optimization over time: moving-peaks benchmarks, uniform-sampling solvers, metrics"};
    app.require_subcommand(1);
    Globals g;
    std::uint64_t seed = 1;
    std::size_t reps = 0;
    std::string out;
    int workers = 0;
    auto* seed_opt = app.add_option("--seed", seed, "master seed (64-bit unsigned)");
    auto* reps_opt = app.add_option("--reps", reps, "number of replications")->check(CLI::PositiveNumber);
    auto* out_opt = app.add_option("--out", out, "output directory");
    auto* workers_opt = app.add_option("--workers", workers, "worker threads (default: ROOT_BENCH_WORKERS or all cores)")
                            ->check(CLI::PositiveNumber);
    app.fallthrough();

    std::string config_path;
    auto* run = app.add_subcommand("run", "run one configured experiment");
    run->add_option("config", config_path, "key = value config file")->required();

    app.add_subcommand("table2", "gap to the optimum for Methods A, B, C");
    app.add_subcommand("table3", "averaged objective and survival time, Method B");

    std::string which;
    auto* fig = app.add_subcommand("fig", "figure data (fig2: benchmark 1, fig3: benchmark 2)");
    fig->add_option("which", which, "fig2 or fig3")->required()->check(CLI::IsMember({"fig2", "fig3"}));

    std::size_t draws = 1000000;
    std::size_t bins = 64;
    auto* angles = app.add_subcommand("angles", "angle density of the sphere and square direction samplers");
    angles->add_option("--draws", draws, "number of draws");
    angles->add_option("--bins", bins, "histogram bins");

    std::vector<int> peaks = {5, 25};
    int max_t = 20;
    auto* maxh = app.add_subcommand("maxheight", "mean height of the tallest peak over time");
    maxh->add_option("--peaks", peaks, "peak counts")->delimiter(',');
    maxh->add_option("--T", max_t, "horizon");
    SigmaDraw sigma_draw = SigmaDraw::per_peak;
    maxh->add_option("--sigma-draw", sigma_draw, "per_peak or per_step")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, SigmaDraw>{{"per_peak", SigmaDraw::per_peak}, {"per_step", SigmaDraw::per_step}}));

    std::string export_config;
    std::string benchmark = "bench1";
    int export_t = 0;
    std::size_t replication = 0;
    std::string file;
    auto* exp = app.add_subcommand("export-trajectory", "write one realized environment trajectory");
    exp->add_option("--config", export_config, "config file (benchmark parameters)");
    exp->add_option("--benchmark", benchmark, "bench1 or bench2 (without --config)")->check(CLI::IsMember({"bench1", "bench2"}));
    exp->add_option("--T", export_t, "horizon (default from config)");
    exp->add_option("--replication", replication, "replication index for the seed stream");
    exp->add_option("--file", file, "output path, '-' for stdout (default <out>/trajectory.txt)");

    int states = 1000;
    auto* verify = app.add_subcommand("verify", "run the invariant and cover-lemma checks");
    verify->add_option("--states", states, "random states for the lemma check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (*seed_opt) g.seed = seed;
    if (*reps_opt) g.reps = reps;
    if (*out_opt) g.out = out;
    if (*workers_opt) g.workers = workers;

    try {
        if (*run) return cmd_run(g, config_path);
        if (app.got_subcommand("table2")) return cmd_table2(g);
        if (app.got_subcommand("table3")) return cmd_table3(g);
        if (*fig) return cmd_fig(g, which);
        if (*angles) return cmd_angles(g, draws, bins);
        if (*maxh) return cmd_maxheight(g, peaks, max_t, sigma_draw);
        if (*exp) return cmd_export(g, export_config, benchmark, export_t, replication, file);
        if (*verify) return cmd_verify(g, states);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
