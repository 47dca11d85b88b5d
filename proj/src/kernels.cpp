#include "rootbench/kernels.hpp"

#include <stdexcept>

namespace rootbench {
namespace kernels {

void evaluate_serial(const Lattice& lattice, std::span<const std::size_t> indices, const Objective& f,
                     std::span<double> out) {
    for (std::size_t i = 0; i < indices.size(); ++i) out[i] = f(lattice.point(indices[i]));
}

void evaluate_parallel(const Lattice& lattice, std::span<const std::size_t> indices, const Objective& f,
                       std::span<double> out) {
    const auto n = static_cast<std::ptrdiff_t>(indices.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = f(lattice.point(indices[i]));
}

void evaluate_all_serial(const Lattice& lattice, const Objective& f, std::span<double> out) {
    for (std::size_t n = 0; n < lattice.size(); ++n) out[n] = f(lattice.point(n));
}

void evaluate_all_parallel(const Lattice& lattice, const Objective& f, std::span<double> out) {
    const auto size = static_cast<std::ptrdiff_t>(lattice.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t n = 0; n < size; ++n) out[n] = f(lattice.point(static_cast<std::size_t>(n)));
}

void neighborhood_average_serial(const NeighborTable& table, std::span<const double> values,
                                 std::span<double> out) {
    for (std::size_t n = 0; n < table.size(); ++n) {
        double sum = 0.0;
        for (std::size_t j = table.offsets[n]; j < table.offsets[n + 1]; ++j) sum += values[table.indices[j]];
        out[n] = sum / static_cast<double>(table.count(n));
    }
}

void neighborhood_average_parallel(const NeighborTable& table, std::span<const double> values,
                                   std::span<double> out) {
    const auto size = static_cast<std::ptrdiff_t>(table.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
        const auto n = static_cast<std::size_t>(i);
        double sum = 0.0;
        for (std::size_t j = table.offsets[n]; j < table.offsets[n + 1]; ++j) sum += values[table.indices[j]];
        out[n] = sum / static_cast<double>(table.count(n));
    }
}

}  // namespace kernels

void evaluate(Execution exec, const Lattice& lattice, std::span<const std::size_t> indices, const Objective& f,
              std::span<double> out) {
    if (out.size() < indices.size()) throw std::invalid_argument("evaluate: output too small");
    if (exec == Execution::parallel)
        kernels::evaluate_parallel(lattice, indices, f, out);
    else
        kernels::evaluate_serial(lattice, indices, f, out);
}

void evaluate_all(Execution exec, const Lattice& lattice, const Objective& f, std::span<double> out) {
    if (out.size() < lattice.size()) throw std::invalid_argument("evaluate_all: output too small");
    if (exec == Execution::parallel)
        kernels::evaluate_all_parallel(lattice, f, out);
    else
        kernels::evaluate_all_serial(lattice, f, out);
}

void neighborhood_average(Execution exec, const NeighborTable& table, std::span<const double> values,
                          std::span<double> out) {
    if (values.size() < table.size() || out.size() < table.size())
        throw std::invalid_argument("neighborhood_average: size mismatch");
    if (exec == Execution::parallel)
        kernels::neighborhood_average_parallel(table, values, out);
    else
        kernels::neighborhood_average_serial(table, values, out);
}

}  // namespace rootbench
