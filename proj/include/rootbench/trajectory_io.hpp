// trajectory_io.hpp
// Line-oriented text format for realized trajectories, so external solvers
// can be scored on identical environments.
//
//   # rootbench-trajectory 1
//   # benchmark bench1
//   # seed <u64>
//   # horizon <T>
//   # param <key> <value>          (one line per benchmark parameter)
//   <t> <per-peak fields...> [<angles...>]
//
// Benchmark 1, per peak: c_1..c_D h w v_1..v_D sigma_h sigma_w.
// Benchmark 2, per peak: c_1..c_D h_1..h_D w_1..w_D; then theta_1..theta_{D-1}.
// Reals are written with 17 significant digits, so a round trip is exact.
#pragma once

#include <iosfwd>

#include "rootbench/trajectory.hpp"

namespace rootbench {

void write_trajectory(std::ostream& out, const Trajectory& trajectory);

/// Throws std::runtime_error with a line number on malformed input.
Trajectory read_trajectory(std::istream& in);

}  // namespace rootbench
