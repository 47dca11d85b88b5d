#include "rootbench/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rootbench {

std::uint64_t mix_seed(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

RngState::RngState(std::uint64_t seed) : seed_(seed), engine_(seed) {}

RngState RngState::for_stream(std::uint64_t master_seed, std::uint64_t replication,
                              std::uint64_t stream) {
    return RngState(mix_seed(mix_seed(mix_seed(master_seed) ^ replication) ^ stream));
}

double RngState::canonical() {
    // 53 random bits; avoids the rounding-to-1.0 corner of generate_canonical.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t RngState::below(std::size_t n) {
    if (n == 0) throw std::invalid_argument("below: n must be positive");
    std::uniform_int_distribution<std::size_t> dist(0, n - 1);
    return dist(engine_);
}

double sample_normal(RngState& rng) { return rng.normal_(rng.engine_); }

double sample_uniform(RngState& rng, double lo, double hi) {
    if (!(lo <= hi)) throw std::invalid_argument("sample_uniform: lo > hi");
    const double u = rng.canonical();
    if (lo == hi) return lo;
    return lo + (hi - lo) * u;
}

namespace {

void check_direction_args(int dim, double radius) {
    if (dim < 1) throw std::invalid_argument("direction sampler: dimension must be >= 1");
    if (!(radius > 0.0)) throw std::invalid_argument("direction sampler: radius must be > 0");
}

void rescale(std::vector<double>& v, double radius) {
    if (v.size() == 1) {
        v[0] = std::copysign(radius, v[0]);
        return;
    }
    double norm2 = 0.0;
    for (double c : v) norm2 += c * c;
    const double scale = radius / std::sqrt(norm2);
    for (double& c : v) c *= scale;
}

}  // namespace

std::vector<double> sample_sphere(RngState& rng, int dim, double radius) {
    check_direction_args(dim, radius);
    std::vector<double> v(static_cast<std::size_t>(dim));
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& c : v) {
            c = sample_normal(rng);
            norm2 += c * c;
        }
    } while (norm2 == 0.0);
    rescale(v, radius);
    return v;
}

std::vector<double> sample_square_normalized(RngState& rng, int dim, double radius) {
    check_direction_args(dim, radius);
    std::vector<double> v(static_cast<std::size_t>(dim));
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& c : v) {
            c = sample_uniform(rng, -1.0, 1.0);
            norm2 += c * c;
        }
    } while (norm2 == 0.0);
    rescale(v, radius);
    return v;
}

std::vector<double> angle_histogram(DirectionSampler sampler, RngState& rng,
                                    std::size_t draws, std::size_t bins) {
    if (bins < 1 || draws < bins)
        throw std::invalid_argument("angle_histogram: need draws >= bins >= 1");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> counts(bins, 0.0);
    for (std::size_t i = 0; i < draws; ++i) {
        const auto v = sampler == DirectionSampler::sphere ? sample_sphere(rng, 2, 1.0)
                                                           : sample_square_normalized(rng, 2, 1.0);
        double angle = std::atan2(v[1], v[0]);
        if (angle < 0.0) angle += two_pi;
        auto bin = static_cast<std::size_t>(angle / two_pi * static_cast<double>(bins));
        if (bin >= bins) bin = bins - 1;
        counts[bin] += 1.0;
    }
    const double bin_width = two_pi / static_cast<double>(bins);
    for (double& c : counts) c /= static_cast<double>(draws) * bin_width;
    return counts;
}

}  // namespace rootbench
