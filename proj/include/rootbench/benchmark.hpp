// benchmark.hpp
// The two moving-peaks environments: conic peaks with momentum (benchmark 1)
// and per-dimension peaks with rotating centers (benchmark 2).
#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "rootbench/rng.hpp"

namespace rootbench {

/// Search space [lo, hi]^dim.
struct Box {
    double lo = 0.0;
    double hi = 1.0;
    int dim = 1;

    void validate() const;
    double extent() const { return hi - lo; }
    bool contains(std::span<const double> x) const;
    void clip(std::span<double> x) const;
};

/// Closed interval used for bounds of a scalar variable.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double clip(double v) const { return v < lo ? lo : (v > hi ? hi : v); }
    bool contains(double v) const { return lo <= v && v <= hi; }
    double midpoint() const { return 0.5 * (lo + hi); }
};

enum class BenchmarkKind { conic = 1, rotating = 2 };

std::string_view to_string(BenchmarkKind kind);

enum class CenterInit { random, grid };

/// When the Benchmark 1 noise scales are drawn: once per peak, or afresh every step.
enum class SigmaDraw { per_peak, per_step };

std::string_view to_string(CenterInit mode);

/// Benchmark 1 parameters. Defaults follow the published table.
struct ConicPeaksParams {
    int peaks = 5;
    Box box{0.0, 50.0, 2};
    Interval height{30.0, 70.0};
    Interval width{1.0, 12.0};
    double height_init = 50.0;
    double width_init = 6.0;
    double lambda = 0.0;
    /// Step length s^m of every peak.
    double step = 1.0;
    /// sigma_h^m and sigma_w^m are drawn once per peak from these ranges.
    /// A degenerate range fixes the value.
    Interval sigma_height{1.0, 10.0};
    Interval sigma_width{0.1, 1.0};
    SigmaDraw sigma_draw = SigmaDraw::per_peak;

    void validate() const;
};

struct ConicPeaksState {
    Box box;
    int peaks = 0;
    std::vector<double> centers;     // peaks x dim, row-major
    std::vector<double> heights;
    std::vector<double> widths;
    std::vector<double> velocities;  // peaks x dim
    std::vector<double> sigma_height;
    std::vector<double> sigma_width;

    int dim() const { return box.dim; }
    std::span<const double> center(int m) const {
        return {centers.data() + static_cast<std::size_t>(m) * dim(), static_cast<std::size_t>(dim())};
    }
    std::span<const double> velocity(int m) const {
        return {velocities.data() + static_cast<std::size_t>(m) * dim(), static_cast<std::size_t>(dim())};
    }
};

/// Benchmark 2 parameters. Defaults follow the published table with the
/// search space [-25, 25]^2.
struct RotatingPeaksParams {
    int peaks = 25;
    Box box{-25.0, 25.0, 2};
    Interval height{30.0, 70.0};
    Interval width{1.0, 13.0};
    Interval angle{-std::numbers::pi, std::numbers::pi};
    double sigma_height = 5.0;
    double sigma_width = 0.5;
    double sigma_angle = 1.0;
    double angle_init = 0.0;
    CenterInit center_init = CenterInit::random;

    void validate() const;
};

struct RotatingPeaksState {
    Box box;
    int peaks = 0;
    std::vector<double> centers;  // peaks x dim
    std::vector<double> heights;  // peaks x dim
    std::vector<double> widths;   // peaks x dim
    std::vector<double> angles;   // dim - 1

    int dim() const { return box.dim; }
    std::span<const double> center(int m) const {
        return {centers.data() + static_cast<std::size_t>(m) * dim(), static_cast<std::size_t>(dim())};
    }
};

/// Location and value of the exact maximum of one environment snapshot.
struct Optimum {
    std::vector<double> x;
    double value = 0.0;
};

ConicPeaksState initial_state(const ConicPeaksParams& params, RngState& rng);

/// One step of the momentum dynamics: perturb heights and widths, blend a
/// fresh sphere direction with the previous velocity, move, then clip.
/// Centers are clipped; the stored velocity is left as computed.
ConicPeaksState advance(const ConicPeaksState& state, const ConicPeaksParams& params, RngState& rng);

/// max_m (h^m - w^m |x - c^m|). Throws std::domain_error outside the box.
double value(const ConicPeaksState& state, std::span<const double> x);
double value_unchecked(const ConicPeaksState& state, std::span<const double> x);

/// Tallest peak center; lowest index on ties.
Optimum optimum(const ConicPeaksState& state);

/// Largest width, the Euclidean Lipschitz constant of the objective.
double lipschitz_constant(const ConicPeaksState& state);

RotatingPeaksState initial_state(const RotatingPeaksParams& params, RngState& rng);

/// R^{D-1}(theta^{D-1}) ... R^1(theta^1), where R^d rotates the (d, d+1) plane.
Eigen::MatrixXd rotation_matrix(std::span<const double> angles);

/// Perturb heights and widths, rotate centers with the current angles, then
/// perturb the angles; everything is clipped into its bounds.
RotatingPeaksState advance(const RotatingPeaksState& state, const RotatingPeaksParams& params,
                           RngState& rng);

/// (1/D) sum_d max_m (h^{m,d} - w^{m,d} |x^d - c^{m,d}|). Throws std::domain_error outside the box.
double value(const RotatingPeaksState& state, std::span<const double> x);
double value_unchecked(const RotatingPeaksState& state, std::span<const double> x);

/// Solves the D independent one-dimensional problems by scanning the peak centers.
Optimum optimum(const RotatingPeaksState& state);

/// Euclidean Lipschitz constant: max_{m,d} w^{m,d} / sqrt(D).
double lipschitz_constant(const RotatingPeaksState& state);

}  // namespace rootbench
