#include "rootbench/trajectory.hpp"

#include <stdexcept>
#include <string>

namespace rootbench {

BenchmarkKind kind_of(const EnvironmentParams& params) {
    return std::holds_alternative<ConicPeaksParams>(params) ? BenchmarkKind::conic : BenchmarkKind::rotating;
}

const Box& box_of(const EnvironmentParams& params) {
    return std::visit([](const auto& p) -> const Box& { return p.box; }, params);
}

Trajectory Trajectory::generate(const EnvironmentParams& params, int horizon, RngState& rng) {
    if (horizon < 1) throw std::invalid_argument("trajectory horizon must be >= 1");
    const std::uint64_t seed = rng.seed();
    auto states = std::visit(
        [&](const auto& p) -> std::variant<ConicStates, RotatingStates> {
            using State = decltype(initial_state(p, rng));
            std::vector<State> out;
            out.reserve(static_cast<std::size_t>(horizon));
            out.push_back(initial_state(p, rng));
            for (int t = 1; t < horizon; ++t) out.push_back(advance(out.back(), p, rng));
            return out;
        },
        params);
    return Trajectory(params, seed, std::move(states));
}

Trajectory::Trajectory(EnvironmentParams params, std::uint64_t seed,
                       std::variant<ConicStates, RotatingStates> states)
    : params_(std::move(params)), seed_(seed), states_(std::move(states)) {
    if (states_.index() != params_.index())
        throw std::invalid_argument("trajectory states do not match the benchmark kind");
    if (horizon() < 1) throw std::invalid_argument("trajectory must hold at least one state");
}

int Trajectory::horizon() const {
    return std::visit([](const auto& s) { return static_cast<int>(s.size()); }, states_);
}

std::size_t Trajectory::index(int t) const {
    if (t < 1 || t > horizon())
        throw std::out_of_range("time " + std::to_string(t) + " outside [1, " + std::to_string(horizon()) + "]");
    return static_cast<std::size_t>(t - 1);
}

const ConicPeaksState& Trajectory::conic(int t) const { return std::get<ConicStates>(states_).at(index(t)); }

const RotatingPeaksState& Trajectory::rotating(int t) const {
    return std::get<RotatingStates>(states_).at(index(t));
}

double Trajectory::value(int t, std::span<const double> x) const {
    const std::size_t i = index(t);
    return std::visit([&](const auto& s) { return rootbench::value(s[i], x); }, states_);
}

double Trajectory::value_unchecked(int t, std::span<const double> x) const {
    const auto i = static_cast<std::size_t>(t - 1);
    if (states_.index() == 0) return rootbench::value_unchecked(std::get<0>(states_)[i], x);
    return rootbench::value_unchecked(std::get<1>(states_)[i], x);
}

Optimum Trajectory::optimum(int t) const {
    const std::size_t i = index(t);
    return std::visit([&](const auto& s) { return rootbench::optimum(s[i]); }, states_);
}

double Trajectory::lipschitz_constant(int t) const {
    const std::size_t i = index(t);
    return std::visit([&](const auto& s) { return rootbench::lipschitz_constant(s[i]); }, states_);
}

TimeObjective Trajectory::objective() const {
    return [this](int t, std::span<const double> x) { return value_unchecked(t, x); };
}

namespace {

bool same(const ConicPeaksState& a, const ConicPeaksState& b) {
    return a.peaks == b.peaks && a.box.dim == b.box.dim && a.centers == b.centers && a.heights == b.heights &&
           a.widths == b.widths && a.velocities == b.velocities && a.sigma_height == b.sigma_height &&
           a.sigma_width == b.sigma_width;
}

bool same(const RotatingPeaksState& a, const RotatingPeaksState& b) {
    return a.peaks == b.peaks && a.box.dim == b.box.dim && a.centers == b.centers && a.heights == b.heights &&
           a.widths == b.widths && a.angles == b.angles;
}

}  // namespace

bool operator==(const Trajectory& a, const Trajectory& b) {
    if (a.states_.index() != b.states_.index() || a.horizon() != b.horizon()) return false;
    return std::visit(
        [&](const auto& sa) {
            const auto& sb = std::get<std::decay_t<decltype(sa)>>(b.states_);
            for (std::size_t i = 0; i < sa.size(); ++i)
                if (!same(sa[i], sb[i])) return false;
            return true;
        },
        a.states_);
}

}  // namespace rootbench
