#include "rootbench/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

namespace rootbench {

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

std::vector<int> ExperimentConfig::default_windows() {
    std::vector<int> s(20);
    for (int i = 0; i < 20; ++i) s[static_cast<std::size_t>(i)] = i + 1;
    return s;
}

ExperimentConfig default_config(BenchmarkKind kind) {
    ExperimentConfig c;
    if (kind == BenchmarkKind::rotating) c.environment = RotatingPeaksParams{};
    return c;
}

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

double to_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) throw ConfigError(key, "expected a number, got '" + value + "'");
    return out;
}

template <class Int>
Int to_integer(const std::string& key, const std::string& value) {
    Int out{};
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) throw ConfigError(key, "expected an integer, got '" + value + "'");
    return out;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// "5" -> [5, 5]; "U(1, 10)" -> [1, 10].
Interval to_distribution(const std::string& key, const std::string& value) {
    if (value.size() > 3 && (value[0] == 'U' || value[0] == 'u') && value[1] == '(' && value.back() == ')') {
        const auto parts = split_list(value.substr(2, value.size() - 3));
        if (parts.size() != 2) throw ConfigError(key, "expected U(lo, hi)");
        return {to_double(key, parts[0]), to_double(key, parts[1])};
    }
    const double v = to_double(key, value);
    return {v, v};
}

std::string distribution_text(const Interval& iv) {
    if (iv.lo == iv.hi) return format_double(iv.lo);
    return "U(" + format_double(iv.lo) + ", " + format_double(iv.hi) + ")";
}

template <class Params>
bool apply_common(Params& p, const std::string& key, const std::string& value) {
    if (key == "M") p.peaks = to_integer<int>(key, value);
    else if (key == "D") p.box.dim = to_integer<int>(key, value);
    else if (key == "x_min") p.box.lo = to_double(key, value);
    else if (key == "x_max") p.box.hi = to_double(key, value);
    else if (key == "h_min") p.height.lo = to_double(key, value);
    else if (key == "h_max") p.height.hi = to_double(key, value);
    else if (key == "w_min") p.width.lo = to_double(key, value);
    else if (key == "w_max") p.width.hi = to_double(key, value);
    else return false;
    return true;
}

bool apply_conic(ConicPeaksParams& p, const std::string& key, const std::string& value) {
    if (apply_common(p, key, value)) return true;
    if (key == "h_init") p.height_init = to_double(key, value);
    else if (key == "w_init") p.width_init = to_double(key, value);
    else if (key == "lambda") p.lambda = to_double(key, value);
    else if (key == "s") p.step = to_double(key, value);
    else if (key == "sigma_h") p.sigma_height = to_distribution(key, value);
    else if (key == "sigma_w") p.sigma_width = to_distribution(key, value);
    else if (key == "sigma_draw") {
        if (value == "per_peak") p.sigma_draw = SigmaDraw::per_peak;
        else if (value == "per_step") p.sigma_draw = SigmaDraw::per_step;
        else throw ConfigError(key, "expected 'per_peak' or 'per_step'");
    } else return false;
    return true;
}

bool apply_rotating(RotatingPeaksParams& p, const std::string& key, const std::string& value) {
    if (apply_common(p, key, value)) return true;
    if (key == "theta_min") p.angle.lo = to_double(key, value);
    else if (key == "theta_max") p.angle.hi = to_double(key, value);
    else if (key == "sigma_h") p.sigma_height = to_double(key, value);
    else if (key == "sigma_w") p.sigma_width = to_double(key, value);
    else if (key == "sigma_theta") p.sigma_angle = to_double(key, value);
    else if (key == "theta_init") p.angle_init = to_double(key, value);
    else if (key == "center_init") {
        if (value == "random") p.center_init = CenterInit::random;
        else if (value == "grid") p.center_init = CenterInit::grid;
        else throw ConfigError(key, "expected 'random' or 'grid'");
    } else return false;
    return true;
}

const std::vector<std::string>& all_keys() {
    static const std::vector<std::string> keys = {
        "benchmark", "method", "M", "D", "x_min", "x_max", "h_min", "h_max", "w_min", "w_max",
        "sigma_h", "sigma_w", "sigma_draw", "h_init", "w_init", "lambda", "s", "theta_min", "theta_max",
        "sigma_theta", "theta_init", "center_init", "n_eval", "n_loc", "n_sub", "T", "replications",
        "seed", "S", "delta", "t_lo", "t_hi", "lookahead", "radius", "radius_units", "radius_norm", "output_dir"};
    return keys;
}

}  // namespace

bool apply_environment_entry(EnvironmentParams& params, const std::string& key, const std::string& value) {
    if (auto* c = std::get_if<ConicPeaksParams>(&params)) return apply_conic(*c, key, value);
    return apply_rotating(std::get<RotatingPeaksParams>(params), key, value);
}

std::vector<std::pair<std::string, std::string>> environment_entries(const EnvironmentParams& params) {
    std::vector<std::pair<std::string, std::string>> out;
    const auto common = [&out](const auto& p) {
        out.emplace_back("M", std::to_string(p.peaks));
        out.emplace_back("D", std::to_string(p.box.dim));
        out.emplace_back("x_min", format_double(p.box.lo));
        out.emplace_back("x_max", format_double(p.box.hi));
        out.emplace_back("h_min", format_double(p.height.lo));
        out.emplace_back("h_max", format_double(p.height.hi));
        out.emplace_back("w_min", format_double(p.width.lo));
        out.emplace_back("w_max", format_double(p.width.hi));
    };
    if (const auto* c = std::get_if<ConicPeaksParams>(&params)) {
        common(*c);
        out.emplace_back("h_init", format_double(c->height_init));
        out.emplace_back("w_init", format_double(c->width_init));
        out.emplace_back("lambda", format_double(c->lambda));
        out.emplace_back("s", format_double(c->step));
        out.emplace_back("sigma_h", distribution_text(c->sigma_height));
        out.emplace_back("sigma_w", distribution_text(c->sigma_width));
        out.emplace_back("sigma_draw", c->sigma_draw == SigmaDraw::per_step ? "per_step" : "per_peak");
    } else {
        const auto& r = std::get<RotatingPeaksParams>(params);
        common(r);
        out.emplace_back("theta_min", format_double(r.angle.lo));
        out.emplace_back("theta_max", format_double(r.angle.hi));
        out.emplace_back("sigma_h", format_double(r.sigma_height));
        out.emplace_back("sigma_w", format_double(r.sigma_width));
        out.emplace_back("sigma_theta", format_double(r.sigma_angle));
        out.emplace_back("theta_init", format_double(r.angle_init));
        out.emplace_back("center_init", std::string(to_string(r.center_init)));
    }
    return out;
}

void ExperimentConfig::validate() const {
    try {
        std::visit([](const auto& p) { p.validate(); }, environment);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("", std::string("benchmark parameters: ") + e.what());
    }
    if (horizon < 1) throw ConfigError("T", "must be >= 1");
    if (replications < 1) throw ConfigError("replications", "must be >= 1");
    if (budget.n_loc > budget.n_eval) throw ConfigError("n_loc", "exceeds n_eval");
    if (budget.n_sub > budget.n_eval) throw ConfigError("n_sub", "exceeds n_eval");
    if (method == Method::B && budget.n_sub + budget.n_loc > budget.n_eval)
        throw ConfigError("n_loc", "n_sub + n_loc exceeds n_eval");
    if (method != Method::C && budget.n_sub == 0) throw ConfigError("n_sub", "must be positive");
    if (lattice_root(budget.n_eval, box_of(environment).dim) < 2)
        throw ConfigError("n_eval", "must be k^D with k >= 2");
    if (radius < 0.0) throw ConfigError("radius", "must be non-negative");
    for (int s : metrics.windows)
        if (s < 1) throw ConfigError("S", "windows must be >= 1");
    if (metrics.t_lo < 1) throw ConfigError("t_lo", "must be >= 1");
    if (metrics.t_hi > horizon) throw ConfigError("t_hi", "exceeds T");
    if (metrics.t_lo > metrics.t_hi) throw ConfigError("t_lo", "exceeds t_hi");
    if (metrics.lookahead < 0) throw ConfigError("lookahead", "must be >= 0");
    if (metrics.lookahead > 0)
        for (int s : metrics.windows)
            if (s > metrics.lookahead) throw ConfigError("S", "windows must not exceed lookahead");
}

ExperimentConfig parse_config(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::map<std::string, int> seen;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
        std::string key = trim(std::string_view(body).substr(0, eq));
        std::string value = trim(std::string_view(body).substr(eq + 1));
        if (std::find(all_keys().begin(), all_keys().end(), key) == all_keys().end())
            throw ConfigError(key, "unknown key");
        if (seen[key]++ > 0) throw ConfigError(key, "given more than once");
        if (value.empty()) throw ConfigError(key, "missing value");
        entries.emplace_back(std::move(key), std::move(value));
    }

    BenchmarkKind kind = BenchmarkKind::conic;
    for (const auto& [key, value] : entries) {
        if (key != "benchmark") continue;
        if (value == "bench1" || value == "1") kind = BenchmarkKind::conic;
        else if (value == "bench2" || value == "2") kind = BenchmarkKind::rotating;
        else throw ConfigError(key, "expected 'bench1' or 'bench2'");
    }
    ExperimentConfig c = default_config(kind);

    for (const auto& [key, value] : entries) {
        if (key == "benchmark") continue;
        if (key == "method") {
            if (value == "A") c.method = Method::A;
            else if (value == "B") c.method = Method::B;
            else if (value == "C") c.method = Method::C;
            else throw ConfigError(key, "expected A, B or C");
        } else if (key == "n_eval") c.budget.n_eval = to_integer<std::size_t>(key, value);
        else if (key == "n_loc") c.budget.n_loc = to_integer<std::size_t>(key, value);
        else if (key == "n_sub") c.budget.n_sub = to_integer<std::size_t>(key, value);
        else if (key == "T") c.horizon = to_integer<int>(key, value);
        else if (key == "replications") c.replications = to_integer<std::size_t>(key, value);
        else if (key == "seed") c.seed = to_integer<std::uint64_t>(key, value);
        else if (key == "t_lo") c.metrics.t_lo = to_integer<int>(key, value);
        else if (key == "t_hi") c.metrics.t_hi = to_integer<int>(key, value);
        else if (key == "lookahead") c.metrics.lookahead = to_integer<int>(key, value);
        else if (key == "radius") c.radius = to_double(key, value);
        else if (key == "output_dir") c.output_dir = value;
        else if (key == "radius_units") {
            if (value == "coordinate") c.radius_units = DistanceUnits::coordinate;
            else if (value == "index") c.radius_units = DistanceUnits::index;
            else throw ConfigError(key, "expected 'coordinate' or 'index'");
        } else if (key == "radius_norm") {
            if (value == "euclidean") c.radius_norm = DistanceNorm::euclidean;
            else if (value == "maximum") c.radius_norm = DistanceNorm::maximum;
            else throw ConfigError(key, "expected 'euclidean' or 'maximum'");
        } else if (key == "S") {
            c.metrics.windows.clear();
            for (const auto& item : split_list(value)) c.metrics.windows.push_back(to_integer<int>(key, item));
        } else if (key == "delta") {
            c.metrics.thresholds.clear();
            for (const auto& item : split_list(value)) c.metrics.thresholds.push_back(to_double(key, item));
        } else if (!apply_environment_entry(c.environment, key, value)) {
            throw ConfigError(key, std::string("not a parameter of ") + std::string(to_string(kind)));
        }
    }
    // The default t_hi tracks T when only T was changed.
    if (seen.count("T") && !seen.count("t_hi")) c.metrics.t_hi = std::min(c.metrics.t_hi, c.horizon);
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string echo_config(const ExperimentConfig& c) {
    std::string out;
    const auto put = [&out](std::string_view key, const std::string& value) {
        out += fmt::format("{} = {}\n", key, value);
    };
    put("benchmark", std::string(to_string(c.kind())));
    put("method", std::string(to_string(c.method)));
    for (const auto& [key, value] : environment_entries(c.environment)) put(key, value);
    put("n_eval", std::to_string(c.budget.n_eval));
    put("n_loc", std::to_string(c.budget.n_loc));
    put("n_sub", std::to_string(c.budget.n_sub));
    put("T", std::to_string(c.horizon));
    put("replications", std::to_string(c.replications));
    put("seed", std::to_string(c.seed));
    put("S", fmt::format("{}", fmt::join(c.metrics.windows, ", ")));
    std::vector<std::string> deltas;
    for (double d : c.metrics.thresholds) deltas.push_back(format_double(d));
    put("delta", fmt::format("{}", fmt::join(deltas, ", ")));
    put("t_lo", std::to_string(c.metrics.t_lo));
    put("t_hi", std::to_string(c.metrics.t_hi));
    put("lookahead", std::to_string(c.metrics.lookahead));
    put("radius", format_double(c.radius));
    put("radius_units", c.radius_units == DistanceUnits::coordinate ? "coordinate" : "index");
    put("radius_norm", c.radius_norm == DistanceNorm::euclidean ? "euclidean" : "maximum");
    put("output_dir", c.output_dir);
    return out;
}

}  // namespace rootbench
