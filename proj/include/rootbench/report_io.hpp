// report_io.hpp
// CSV and text outputs. CSVs use '.' decimals and 17 significant digits.
#pragma once

#include <filesystem>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rootbench/experiments.hpp"

namespace rootbench {

/// Writes metrics.csv, summary.csv, replications.csv, budget.csv,
/// effective_config.txt and manifest.txt into dir (created if needed).
void write_report(const ExperimentReport& report, const std::filesystem::path& dir);

/// benchmark,method,metric,parameter,t,value,censored (per-time means).
void write_metrics_csv(std::ostream& out, const ExperimentReport& report);
/// benchmark,method,metric,parameter,t_first,t_last,mean,std_error,censored_fraction,replications
void write_summary_csv(std::ostream& out, const ExperimentReport& report);
/// replication,benchmark,method,metric,parameter,value,censored
void write_replications_csv(std::ostream& out, const ExperimentReport& report);
/// method,t,min_evaluations,max_evaluations,n_eval
void write_budget_csv(std::ostream& out, const ExperimentReport& report);

void write_manifest(std::ostream& out, std::uint64_t seed, std::size_t replications, int workers, double seconds);

void write_table2_csv(std::ostream& out, const std::vector<GapRow>& rows);
void write_table3_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);
void write_panel_csv(std::ostream& out, const FigurePanel& panel);
void write_angle_density_csv(std::ostream& out, const AngleDensity& density);
void write_max_height_csv(std::ostream& out, const std::vector<int>& peaks, const std::vector<std::vector<double>>& series);

/// Version string written into manifests.
const char* version();

}  // namespace rootbench
