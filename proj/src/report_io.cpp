#include "rootbench/report_io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace rootbench {

const char* version() { return "1.0.0"; }

namespace {

std::string num(double v) { return std::isnan(v) ? std::string() : format_double(v); }

std::string parameter_text(const MetricSummary& m) {
    return m.metric == "f_aver" || m.metric == "f_surv" ? format_double(m.parameter) : std::string();
}

std::ofstream open(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

std::string optional_text(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

void write_metrics_csv(std::ostream& out, const ExperimentReport& report) {
    const auto bench = to_string(report.config.kind());
    const auto method = to_string(report.config.method);
    out << "benchmark,method,metric,parameter,t,value,censored\n";
    for (const auto& m : report.metrics) {
        const auto param = parameter_text(m);
        for (std::size_t i = 0; i < m.per_time.size(); ++i) {
            if (std::isnan(m.per_time[i])) continue;
            out << bench << ',' << method << ',' << m.metric << ',' << param << ',' << i + 1 << ','
                << num(m.per_time[i]) << ',' << num(m.per_time_censored[i]) << '\n';
        }
    }
}

void write_summary_csv(std::ostream& out, const ExperimentReport& report) {
    const auto bench = to_string(report.config.kind());
    const auto method = to_string(report.config.method);
    out << "benchmark,method,metric,parameter,t_first,t_last,mean,std_error,censored_fraction,replications\n";
    for (const auto& m : report.metrics)
        out << bench << ',' << method << ',' << m.metric << ',' << parameter_text(m) << ',' << m.t_first << ','
            << m.t_last << ',' << num(m.mean) << ',' << num(m.std_error) << ',' << num(m.censored_fraction) << ','
            << m.per_replication.size() << '\n';
}

void write_replications_csv(std::ostream& out, const ExperimentReport& report) {
    const auto bench = to_string(report.config.kind());
    const auto method = to_string(report.config.method);
    out << "replication,benchmark,method,metric,parameter,value,censored\n";
    for (std::size_t r = 0; r < report.config.replications; ++r)
        for (const auto& m : report.metrics)
            out << r << ',' << bench << ',' << method << ',' << m.metric << ',' << parameter_text(m) << ','
                << num(m.per_replication[r]) << ',' << num(m.per_replication_censored[r]) << '\n';
}

void write_budget_csv(std::ostream& out, const ExperimentReport& report) {
    out << "method,t,min_evaluations,max_evaluations,n_eval\n";
    for (std::size_t i = 0; i < report.budget.min_per_time.size(); ++i)
        out << to_string(report.config.method) << ',' << i + 1 << ',' << report.budget.min_per_time[i] << ','
            << report.budget.max_per_time[i] << ',' << report.config.budget.n_eval << '\n';
}

void write_manifest(std::ostream& out, std::uint64_t seed, std::size_t replications, int workers, double seconds) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
    out << "version = " << version() << '\n'
        << "seed = " << seed << '\n'
        << "replications = " << replications << '\n'
        << "workers = " << workers << '\n'
        << "runtime_seconds = " << fmt::format("{:.3f}", seconds) << '\n'
        << "timestamp = " << stamp << '\n';
}

void write_report(const ExperimentReport& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto metrics = open(dir / "metrics.csv");
    write_metrics_csv(metrics, report);
    auto summary = open(dir / "summary.csv");
    write_summary_csv(summary, report);
    auto reps = open(dir / "replications.csv");
    write_replications_csv(reps, report);
    auto budget = open(dir / "budget.csv");
    write_budget_csv(budget, report);
    auto echo = open(dir / "effective_config.txt");
    echo << echo_config(report.config);
    auto manifest = open(dir / "manifest.txt");
    write_manifest(manifest, report.config.seed, report.config.replications, report.workers, report.seconds);
}

void write_table2_csv(std::ostream& out, const std::vector<GapRow>& rows) {
    out << "setting,bound,method_a,method_b,method_c,stderr_a,stderr_b,stderr_c\n";
    for (const auto& r : rows)
        out << to_string(r.setting) << ',' << num(r.bound) << ',' << num(r.gap[0]) << ',' << num(r.gap[1]) << ','
            << num(r.gap[2]) << ',' << num(r.std_error[0]) << ',' << num(r.std_error[1]) << ','
            << num(r.std_error[2]) << '\n';
}

void write_table3_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
    out << "setting,source,best_aver_s2,best_aver_s6,best_surv_40,best_surv_50,"
           "aver_s2,aver_s6,surv_40,surv_50,stderr_aver_s2,stderr_aver_s6,stderr_surv_40,stderr_surv_50\n";
    for (const auto& r : rows) {
        out << to_string(r.reference.setting) << ",\"" << r.reference.source << "\"," << optional_text(r.reference.aver_s2)
            << ',' << optional_text(r.reference.aver_s6) << ',' << optional_text(r.reference.surv_40) << ','
            << optional_text(r.reference.surv_50);
        for (double v : r.ours) out << ',' << num(v);
        for (double v : r.std_error) out << ',' << num(v);
        out << '\n';
    }
}

void write_panel_csv(std::ostream& out, const FigurePanel& panel) {
    out << panel.x_label << ",A,B,C\n";
    for (std::size_t i = 0; i < panel.x.size(); ++i)
        out << num(panel.x[i]) << ',' << num(panel.y[0][i]) << ',' << num(panel.y[1][i]) << ','
            << num(panel.y[2][i]) << '\n';
}

void write_angle_density_csv(std::ostream& out, const AngleDensity& density) {
    out << "angle,square,sphere\n";
    for (std::size_t i = 0; i < density.angle.size(); ++i)
        out << num(density.angle[i]) << ',' << num(density.square[i]) << ',' << num(density.sphere[i]) << '\n';
}

void write_max_height_csv(std::ostream& out, const std::vector<int>& peaks,
                          const std::vector<std::vector<double>>& series) {
    out << 't';
    for (int m : peaks) out << ",M" << m;
    out << '\n';
    const std::size_t T = series.empty() ? 0 : series.front().size();
    for (std::size_t t = 0; t < T; ++t) {
        out << t + 1;
        for (const auto& s : series) out << ',' << num(s[t]);
        out << '\n';
    }
}

}  // namespace rootbench
