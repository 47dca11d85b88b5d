// grid.hpp
// Fixed lattice discretization shared by every time instant, plus the
// append-only history of values observed on it.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rootbench/benchmark.hpp"

namespace rootbench {

/// Uniform axis-aligned lattice with k points per axis, endpoints included.
/// Point n has axis-d index (n / k^d) % k.
class Lattice {
public:
    Lattice(const Box& box, std::size_t points);

    const Box& box() const { return box_; }
    int dim() const { return box_.dim; }
    std::size_t size() const { return size_; }
    std::size_t per_axis() const { return per_axis_; }
    double spacing() const { return spacing_; }
    std::span<const double> point(std::size_t n) const {
        return {coords_.data() + n * static_cast<std::size_t>(box_.dim), static_cast<std::size_t>(box_.dim)};
    }
    const std::vector<double>& coordinates() const { return coords_; }

private:
    Box box_;
    std::size_t per_axis_ = 0;
    std::size_t size_ = 0;
    double spacing_ = 0.0;
    std::vector<double> coords_;
};

/// Throws std::invalid_argument unless points = k^dim with k >= 2.
Lattice make_lattice(const Box& box, std::size_t points);

/// k with k^dim == points, or 0 when points is not a perfect power.
std::size_t lattice_root(std::size_t points, int dim);

enum class DistanceUnits { coordinate, index };
enum class DistanceNorm { euclidean, maximum };

/// Per-point neighbor lists (CSR) of all lattice points within the radius,
/// the point itself included. Points outside the box do not exist.
struct NeighborTable {
    std::vector<std::size_t> offsets;  // size() + 1 entries
    std::vector<std::uint32_t> indices;

    std::size_t size() const { return offsets.empty() ? 0 : offsets.size() - 1; }
    std::size_t count(std::size_t n) const { return offsets[n + 1] - offsets[n]; }
};

NeighborTable build_neighbors(const Lattice& lattice, double radius,
                              DistanceUnits units = DistanceUnits::coordinate,
                              DistanceNorm norm = DistanceNorm::euclidean);

/// Lattice plus f_n(t) for every observed t. History is append-only.
class GridSample {
public:
    explicit GridSample(Lattice lattice) : lattice_(std::move(lattice)) {}

    const Lattice& lattice() const { return lattice_; }
    void append(std::vector<double> values);
    int observed() const { return static_cast<int>(history_.size()); }
    /// Values at time t (1-based).
    std::span<const double> values(int t) const;

private:
    Lattice lattice_;
    std::vector<std::vector<double>> history_;
};

}  // namespace rootbench
