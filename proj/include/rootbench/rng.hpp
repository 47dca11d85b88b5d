// rng.hpp
// Seedable random sources for the benchmark dynamics and the solvers.
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace rootbench {

/// SplitMix64 finalizer. Used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t z);

/// Owned generator state. Not shareable between threads; move it instead.
///
/// Streams for replication r of a run with master seed s are derived as
/// mix(mix(mix(s) ^ r) ^ stream), so every (seed, replication, stream)
/// triple gets its own Mersenne Twister independent of worker count.
class RngState {
public:
    explicit RngState(std::uint64_t seed);

    static RngState for_stream(std::uint64_t master_seed, std::uint64_t replication,
                               std::uint64_t stream);

    std::uint64_t seed() const { return seed_; }

    /// Uniform on [0, 1).
    double canonical();
    /// Uniform integer in [0, n). n must be positive.
    std::size_t below(std::size_t n);

    std::mt19937_64& engine() { return engine_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};

    friend double sample_normal(RngState& rng);
};

/// Well-known stream ids for RngState::for_stream.
enum class Stream : std::uint64_t { environment = 0, solver = 1 };

inline RngState stream_for(std::uint64_t master_seed, std::uint64_t replication, Stream s) {
    return RngState::for_stream(master_seed, replication, static_cast<std::uint64_t>(s));
}

double sample_normal(RngState& rng);

/// Uniform on [lo, hi]; lo == hi returns lo. Throws std::invalid_argument if lo > hi.
double sample_uniform(RngState& rng, double lo, double hi);

/// Direction uniform on the sphere of the given radius (normalized Gaussian vector).
std::vector<double> sample_sphere(RngState& rng, int dim, double radius);

/// Components uniform in [-1, 1], rescaled to the given radius. Not uniform on
/// the sphere: diagonal directions are overweighted.
std::vector<double> sample_square_normalized(RngState& rng, int dim, double radius);

enum class DirectionSampler { sphere, square };

/// Empirical density of the angle between 2-D draws and (1, 0) on [0, 2pi).
/// Entry i covers [i, i+1) * 2pi / bins and the densities integrate to one.
std::vector<double> angle_histogram(DirectionSampler sampler, RngState& rng,
                                    std::size_t draws, std::size_t bins);

}  // namespace rootbench
