// experiments.hpp
// The published tables and figures, and the appendix experiments.
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootbench/harness.hpp"

namespace rootbench {

/// Benchmark settings used by the tables and figures.
enum class Setting { bench1_lambda0, bench1_lambda1, bench2_random, bench2_grid };

std::string to_string(Setting setting);

/// Published defaults for the setting with the given method.
ExperimentConfig setting_config(Setting setting, Method method, std::size_t replications, std::uint64_t seed);

/// Runs each (setting, method) at most once and keeps the report.
class ExperimentSuite {
public:
    ExperimentSuite(std::size_t replications, std::uint64_t seed, int workers)
        : replications_(replications), seed_(seed), workers_(workers) {}

    const ExperimentReport& get(Setting setting, Method method);
    std::size_t replications() const { return replications_; }
    std::uint64_t seed() const { return seed_; }

private:
    std::size_t replications_;
    std::uint64_t seed_;
    int workers_;
    std::map<std::pair<Setting, Method>, ExperimentReport> cache_;
};

/// Best-known results of earlier ROOT studies, as collected for comparison.
/// Missing entries were not reported. Not recomputed here.
struct ReferenceResult {
    Setting setting;
    const char* source;
    std::optional<double> aver_s2;
    std::optional<double> aver_s6;
    std::optional<double> surv_40;
    std::optional<double> surv_50;
};

const std::array<ReferenceResult, 3>& best_known_results();

struct GapRow {
    Setting setting;
    double bound = 0.0;                 // L = mean width, n_eval lattice
    std::array<double, 3> gap{};        // Methods A, B, C
    std::array<double, 3> std_error{};
};

/// Gap rows for benchmark 1 (lambda = 0) and benchmark 2.
std::vector<GapRow> table2(ExperimentSuite& suite);

struct ComparisonRow {
    ReferenceResult reference;
    std::array<double, 4> ours{};       // F_aver S=2, S=6, F_surv 40, 50 (Method B)
    std::array<double, 4> std_error{};
};

std::vector<ComparisonRow> table3(ExperimentSuite& suite);

/// Mean over replications of max_m h_t^m for t = 1..horizon (benchmark 1 dynamics).
std::vector<double> experiment_max_height(int peaks, int horizon, std::size_t replications, std::uint64_t seed,
                                          int workers = 1, SigmaDraw sigma_draw = SigmaDraw::per_peak);

struct AngleDensity {
    std::vector<double> angle;   // bin centers
    std::vector<double> square;  // square-normalized sampler
    std::vector<double> sphere;  // uniform sphere sampler
};

AngleDensity experiment_angle_density(std::size_t draws, std::size_t bins, std::uint64_t seed);

/// One plotted panel: x column plus one y column per method.
struct FigurePanel {
    std::string name;
    std::string x_label;
    std::vector<double> x;
    std::array<std::vector<double>, 3> y;  // Methods A, B, C
};

/// Averaged objective vs S and survival vs starting time (thresholds 40 and 50)
/// for one figure column. Throws std::invalid_argument naming a missing sweep.
std::vector<FigurePanel> figure_panels(const std::string& column, const ExperimentReport& a,
                                       const ExperimentReport& b, const ExperimentReport& c);

/// "fig2" (benchmark 1, lambda 0 and 1) or "fig3" (benchmark 2, random and grid centers).
std::vector<FigurePanel> figure(ExperimentSuite& suite, const std::string& which);

}  // namespace rootbench
