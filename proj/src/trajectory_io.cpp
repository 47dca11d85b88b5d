#include "rootbench/trajectory_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rootbench/config.hpp"

namespace rootbench {

namespace {

constexpr const char* kMagic = "rootbench-trajectory";

void put(std::ostream& out, double v) { out << ' ' << format_double(v); }

void write_state(std::ostream& out, const ConicPeaksState& s) {
    for (int m = 0; m < s.peaks; ++m) {
        for (double c : s.center(m)) put(out, c);
        put(out, s.heights[static_cast<std::size_t>(m)]);
        put(out, s.widths[static_cast<std::size_t>(m)]);
        for (double v : s.velocity(m)) put(out, v);
        put(out, s.sigma_height[static_cast<std::size_t>(m)]);
        put(out, s.sigma_width[static_cast<std::size_t>(m)]);
    }
}

void write_state(std::ostream& out, const RotatingPeaksState& s) {
    const auto dim = static_cast<std::size_t>(s.dim());
    for (std::size_t m = 0; m < static_cast<std::size_t>(s.peaks); ++m) {
        for (std::size_t d = 0; d < dim; ++d) put(out, s.centers[m * dim + d]);
        for (std::size_t d = 0; d < dim; ++d) put(out, s.heights[m * dim + d]);
        for (std::size_t d = 0; d < dim; ++d) put(out, s.widths[m * dim + d]);
    }
    for (double a : s.angles) put(out, a);
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::runtime_error("trajectory line " + std::to_string(line) + ": " + what);
}

class FieldReader {
public:
    FieldReader(std::istringstream& in, int line) : in_(in), line_(line) {}
    double next() {
        std::string tok;
        if (!(in_ >> tok)) fail(line_, "too few fields");
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            fail(line_, "bad number '" + tok + "'");
        }
    }
    void finish() {
        std::string tok;
        if (in_ >> tok) fail(line_, "too many fields");
    }

private:
    std::istringstream& in_;
    int line_;
};

ConicPeaksState read_state(FieldReader& r, const ConicPeaksParams& p) {
    const auto dim = static_cast<std::size_t>(p.box.dim);
    const auto peaks = static_cast<std::size_t>(p.peaks);
    ConicPeaksState s;
    s.box = p.box;
    s.peaks = p.peaks;
    s.centers.resize(peaks * dim);
    s.velocities.resize(peaks * dim);
    s.heights.resize(peaks);
    s.widths.resize(peaks);
    s.sigma_height.resize(peaks);
    s.sigma_width.resize(peaks);
    for (std::size_t m = 0; m < peaks; ++m) {
        for (std::size_t d = 0; d < dim; ++d) s.centers[m * dim + d] = r.next();
        s.heights[m] = r.next();
        s.widths[m] = r.next();
        for (std::size_t d = 0; d < dim; ++d) s.velocities[m * dim + d] = r.next();
        s.sigma_height[m] = r.next();
        s.sigma_width[m] = r.next();
    }
    return s;
}

RotatingPeaksState read_state(FieldReader& r, const RotatingPeaksParams& p) {
    const auto dim = static_cast<std::size_t>(p.box.dim);
    const auto peaks = static_cast<std::size_t>(p.peaks);
    RotatingPeaksState s;
    s.box = p.box;
    s.peaks = p.peaks;
    s.centers.resize(peaks * dim);
    s.heights.resize(peaks * dim);
    s.widths.resize(peaks * dim);
    s.angles.resize(dim - 1);
    for (std::size_t m = 0; m < peaks; ++m) {
        for (std::size_t d = 0; d < dim; ++d) s.centers[m * dim + d] = r.next();
        for (std::size_t d = 0; d < dim; ++d) s.heights[m * dim + d] = r.next();
        for (std::size_t d = 0; d < dim; ++d) s.widths[m * dim + d] = r.next();
    }
    for (double& a : s.angles) a = r.next();
    return s;
}

}  // namespace

void write_trajectory(std::ostream& out, const Trajectory& trajectory) {
    out << "# " << kMagic << " 1\n";
    out << "# benchmark " << to_string(trajectory.kind()) << '\n';
    out << "# seed " << trajectory.seed() << '\n';
    out << "# horizon " << trajectory.horizon() << '\n';
    for (const auto& [key, value] : environment_entries(trajectory.params()))
        out << "# param " << key << ' ' << value << '\n';
    std::visit(
        [&out](const auto& states) {
            for (std::size_t i = 0; i < states.size(); ++i) {
                out << i + 1;
                write_state(out, states[i]);
                out << '\n';
            }
        },
        trajectory.states());
}

Trajectory read_trajectory(std::istream& in) {
    std::string line;
    int line_no = 0;
    EnvironmentParams params = ConicPeaksParams{};
    std::uint64_t seed = 0;
    int horizon = -1;
    bool have_magic = false;
    bool have_kind = false;
    std::variant<Trajectory::ConicStates, Trajectory::RotatingStates> states;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        if (line[0] == '#') {
            std::string hash, tag;
            fields >> hash >> tag;
            if (tag == kMagic) {
                std::string version;
                fields >> version;
                if (version != "1") fail(line_no, "unsupported version '" + version + "'");
                have_magic = true;
            } else if (tag == "benchmark") {
                std::string kind;
                fields >> kind;
                if (kind == "bench1") params = ConicPeaksParams{};
                else if (kind == "bench2") params = RotatingPeaksParams{};
                else fail(line_no, "unknown benchmark '" + kind + "'");
                states = kind == "bench1" ? decltype(states){Trajectory::ConicStates{}}
                                          : decltype(states){Trajectory::RotatingStates{}};
                have_kind = true;
            } else if (tag == "seed") {
                if (!(fields >> seed)) fail(line_no, "bad seed");
            } else if (tag == "horizon") {
                if (!(fields >> horizon)) fail(line_no, "bad horizon");
            } else if (tag == "param") {
                if (!have_kind) fail(line_no, "param before benchmark line");
                std::string key, value, rest;
                fields >> key;
                std::getline(fields, value);
                const auto first = value.find_first_not_of(' ');
                value = first == std::string::npos ? "" : value.substr(first);
                try {
                    if (!apply_environment_entry(params, key, value)) fail(line_no, "unknown parameter '" + key + "'");
                } catch (const ConfigError& e) {
                    fail(line_no, e.what());
                }
            }
            continue;
        }
        if (!have_magic || !have_kind) fail(line_no, "missing header");
        int t = 0;
        if (!(fields >> t)) fail(line_no, "missing time index");
        FieldReader reader(fields, line_no);
        std::visit(
            [&](auto& list) {
                if (t != static_cast<int>(list.size()) + 1) fail(line_no, "time indices must be consecutive from 1");
                using List = std::decay_t<decltype(list)>;
                if constexpr (std::is_same_v<List, Trajectory::ConicStates>)
                    list.push_back(read_state(reader, std::get<ConicPeaksParams>(params)));
                else
                    list.push_back(read_state(reader, std::get<RotatingPeaksParams>(params)));
            },
            states);
        reader.finish();
    }
    if (!have_magic) throw std::runtime_error("not a rootbench trajectory");
    const int count = std::visit([](const auto& l) { return static_cast<int>(l.size()); }, states);
    if (horizon >= 0 && count != horizon)
        throw std::runtime_error("trajectory declares horizon " + std::to_string(horizon) + " but holds " +
                                 std::to_string(count) + " states");
    return Trajectory(std::move(params), seed, std::move(states));
}

}  // namespace rootbench
