#include "rootbench/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rootbench {

std::size_t lattice_root(std::size_t points, int dim) {
    if (dim < 1 || points == 0) return 0;
    const auto guess = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(points), 1.0 / dim)));
    for (std::size_t k = guess > 1 ? guess - 1 : 1; k <= guess + 1; ++k) {
        std::size_t p = 1;
        for (int d = 0; d < dim && p <= points; ++d) p *= k;
        if (p == points) return k;
    }
    return 0;
}

Lattice::Lattice(const Box& box, std::size_t points) : box_(box) {
    box_.validate();
    per_axis_ = lattice_root(points, box.dim);
    if (per_axis_ < 2)
        throw std::invalid_argument("lattice size " + std::to_string(points) +
                                    " is not k^D with k >= 2 for D = " + std::to_string(box.dim));
    size_ = points;
    spacing_ = box.extent() / static_cast<double>(per_axis_ - 1);
    std::vector<double> axis(per_axis_);
    for (std::size_t i = 0; i < per_axis_; ++i) axis[i] = box.lo + static_cast<double>(i) * spacing_;
    axis.back() = box.hi;
    const auto dim = static_cast<std::size_t>(box.dim);
    coords_.resize(size_ * dim);
    for (std::size_t n = 0; n < size_; ++n) {
        std::size_t rest = n;
        for (std::size_t d = 0; d < dim; ++d) {
            coords_[n * dim + d] = axis[rest % per_axis_];
            rest /= per_axis_;
        }
    }
}

Lattice make_lattice(const Box& box, std::size_t points) { return Lattice(box, points); }

NeighborTable build_neighbors(const Lattice& lattice, double radius, DistanceUnits units, DistanceNorm norm) {
    if (radius < 0.0) throw std::invalid_argument("neighborhood radius must be non-negative");
    const auto dim = static_cast<std::size_t>(lattice.dim());
    const auto k = static_cast<long long>(lattice.per_axis());
    const double unit = units == DistanceUnits::coordinate ? lattice.spacing() : 1.0;
    const long long reach = std::min<long long>(k - 1, static_cast<long long>(std::floor(radius / unit)));

    // Integer offsets within the radius, in lexicographic order.
    std::vector<std::vector<long long>> stencil;
    std::vector<long long> off(dim, -reach);
    for (;;) {
        double dist2 = 0.0;
        for (long long o : off) {
            const double d2 = static_cast<double>(o * o) * unit * unit;
            dist2 = norm == DistanceNorm::euclidean ? dist2 + d2 : std::max(dist2, d2);
        }
        if (dist2 <= radius * radius) stencil.push_back(off);
        std::size_t d = 0;
        while (d < dim && off[d] == reach) off[d++] = -reach;
        if (d == dim) break;
        ++off[d];
    }

    NeighborTable table;
    table.offsets.reserve(lattice.size() + 1);
    table.offsets.push_back(0);
    std::vector<long long> idx(dim);
    for (std::size_t n = 0; n < lattice.size(); ++n) {
        std::size_t rest = n;
        for (std::size_t d = 0; d < dim; ++d) {
            idx[d] = static_cast<long long>(rest % lattice.per_axis());
            rest /= lattice.per_axis();
        }
        for (const auto& o : stencil) {
            long long flat = 0;
            long long stride = 1;
            bool inside = true;
            for (std::size_t d = 0; d < dim; ++d) {
                const long long j = idx[d] + o[d];
                if (j < 0 || j >= k) {
                    inside = false;
                    break;
                }
                flat += j * stride;
                stride *= k;
            }
            if (inside) table.indices.push_back(static_cast<std::uint32_t>(flat));
        }
        table.offsets.push_back(table.indices.size());
    }
    return table;
}

void GridSample::append(std::vector<double> values) {
    if (values.size() != lattice_.size()) throw std::invalid_argument("grid values do not match the lattice size");
    history_.push_back(std::move(values));
}

std::span<const double> GridSample::values(int t) const {
    if (t < 1 || t > observed()) throw std::out_of_range("no grid values recorded for time " + std::to_string(t));
    return history_[static_cast<std::size_t>(t - 1)];
}

}  // namespace rootbench
