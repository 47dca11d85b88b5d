// kernels.hpp
// Data-parallel inner loops of the solvers. Each kernel has a serial
// reference and an OpenMP version that must produce bit-identical output.
#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "rootbench/grid.hpp"

namespace rootbench {

using Objective = std::function<double(std::span<const double>)>;

enum class Execution { serial, parallel };

namespace kernels {

/// out[i] = f(lattice.point(indices[i])).
void evaluate_serial(const Lattice& lattice, std::span<const std::size_t> indices, const Objective& f,
                     std::span<double> out);
void evaluate_parallel(const Lattice& lattice, std::span<const std::size_t> indices, const Objective& f,
                       std::span<double> out);

/// out[n] = f(lattice.point(n)) for every lattice point.
void evaluate_all_serial(const Lattice& lattice, const Objective& f, std::span<double> out);
void evaluate_all_parallel(const Lattice& lattice, const Objective& f, std::span<double> out);

/// out[n] = mean of values over the neighbors of n.
void neighborhood_average_serial(const NeighborTable& table, std::span<const double> values, std::span<double> out);
void neighborhood_average_parallel(const NeighborTable& table, std::span<const double> values,
                                   std::span<double> out);

}  // namespace kernels

void evaluate(Execution exec, const Lattice& lattice, std::span<const std::size_t> indices, const Objective& f,
              std::span<double> out);
void evaluate_all(Execution exec, const Lattice& lattice, const Objective& f, std::span<double> out);
void neighborhood_average(Execution exec, const NeighborTable& table, std::span<const double> values,
                          std::span<double> out);

}  // namespace rootbench
