#include "rootbench/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rootbench {

void Box::validate() const {
    if (dim < 1) throw std::invalid_argument("box: dimension must be >= 1");
    if (!(lo < hi)) throw std::invalid_argument("box: lower bound must be below upper bound");
}

bool Box::contains(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(dim)) return false;
    return std::all_of(x.begin(), x.end(), [this](double v) { return lo <= v && v <= hi; });
}

void Box::clip(std::span<double> x) const {
    for (double& v : x) v = std::clamp(v, lo, hi);
}

std::string_view to_string(BenchmarkKind kind) {
    return kind == BenchmarkKind::conic ? "bench1" : "bench2";
}

std::string_view to_string(CenterInit mode) {
    return mode == CenterInit::random ? "random" : "grid";
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void check_point(const Box& box, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(box.dim))
        throw std::domain_error("query point has wrong dimension");
    if (!box.contains(x)) throw std::domain_error("query point lies outside the search space");
}

// Cartesian product of `per_axis` uniform draws on every axis. Peak m takes
// coordinate (m / per_axis^d) % per_axis on axis d.
std::vector<double> grid_centers(const Box& box, int peaks, RngState& rng) {
    const int per_axis = static_cast<int>(std::lround(std::pow(peaks, 1.0 / box.dim)));
    long long total = 1;
    for (int d = 0; d < box.dim; ++d) total *= per_axis;
    if (total != peaks)
        throw std::invalid_argument("grid center initialization needs a perfect D-th power peak count");
    std::vector<std::vector<double>> axis(static_cast<std::size_t>(box.dim));
    for (auto& a : axis)
        for (int i = 0; i < per_axis; ++i) a.push_back(sample_uniform(rng, box.lo, box.hi));
    std::vector<double> centers(static_cast<std::size_t>(peaks) * box.dim);
    for (int m = 0; m < peaks; ++m) {
        int rest = m;
        for (int d = 0; d < box.dim; ++d) {
            centers[static_cast<std::size_t>(m) * box.dim + d] = axis[d][rest % per_axis];
            rest /= per_axis;
        }
    }
    return centers;
}

}  // namespace

void ConicPeaksParams::validate() const {
    box.validate();
    require(peaks >= 1, "peak count must be >= 1");
    require(height.lo <= height.hi, "height bounds are reversed");
    require(width.lo <= width.hi, "width bounds are reversed");
    require(height.contains(height_init), "h_init must lie within the height bounds");
    require(width.contains(width_init), "w_init must lie within the width bounds");
    require(lambda >= 0.0 && lambda <= 1.0, "lambda must lie in [0, 1]");
    require(step > 0.0, "step length must be positive");
    require(sigma_height.lo >= 0.0 && sigma_height.lo <= sigma_height.hi, "invalid sigma_h range");
    require(sigma_width.lo >= 0.0 && sigma_width.lo <= sigma_width.hi, "invalid sigma_w range");
}

void RotatingPeaksParams::validate() const {
    box.validate();
    require(box.dim >= 2, "benchmark 2 needs dimension >= 2");
    require(peaks >= 1, "peak count must be >= 1");
    require(height.lo <= height.hi, "height bounds are reversed");
    require(width.lo <= width.hi, "width bounds are reversed");
    require(angle.lo <= angle.hi, "angle bounds are reversed");
    require(angle.contains(angle_init), "theta_init must lie within the angle bounds");
    require(sigma_height >= 0.0 && sigma_width >= 0.0 && sigma_angle >= 0.0,
            "perturbation scales must be non-negative");
}

// ---------------------------------------------------------------------------
// Benchmark 1

ConicPeaksState initial_state(const ConicPeaksParams& params, RngState& rng) {
    params.validate();
    const auto dim = static_cast<std::size_t>(params.box.dim);
    const auto peaks = static_cast<std::size_t>(params.peaks);
    ConicPeaksState s;
    s.box = params.box;
    s.peaks = params.peaks;
    s.centers.resize(peaks * dim);
    s.velocities.resize(peaks * dim);
    s.heights.assign(peaks, params.height_init);
    s.widths.assign(peaks, params.width_init);
    s.sigma_height.resize(peaks);
    s.sigma_width.resize(peaks);
    for (std::size_t m = 0; m < peaks; ++m) {
        for (std::size_t d = 0; d < dim; ++d)
            s.centers[m * dim + d] = sample_uniform(rng, params.box.lo, params.box.hi);
        const auto v = sample_sphere(rng, params.box.dim, params.step);
        std::copy(v.begin(), v.end(), s.velocities.begin() + static_cast<std::ptrdiff_t>(m * dim));
        s.sigma_height[m] = sample_uniform(rng, params.sigma_height.lo, params.sigma_height.hi);
        s.sigma_width[m] = sample_uniform(rng, params.sigma_width.lo, params.sigma_width.hi);
    }
    return s;
}

ConicPeaksState advance(const ConicPeaksState& state, const ConicPeaksParams& params, RngState& rng) {
    const auto dim = static_cast<std::size_t>(state.dim());
    ConicPeaksState next = state;
    std::vector<double> blend(dim);
    for (std::size_t m = 0; m < static_cast<std::size_t>(state.peaks); ++m) {
        if (params.sigma_draw == SigmaDraw::per_step) {
            next.sigma_height[m] = sample_uniform(rng, params.sigma_height.lo, params.sigma_height.hi);
            next.sigma_width[m] = sample_uniform(rng, params.sigma_width.lo, params.sigma_width.hi);
        }
        next.heights[m] = state.heights[m] + next.sigma_height[m] * sample_normal(rng);
        next.widths[m] = state.widths[m] + next.sigma_width[m] * sample_normal(rng);

        const double* v_old = state.velocities.data() + m * dim;
        double* v_new = next.velocities.data() + m * dim;
        for (;;) {
            const auto r = sample_sphere(rng, state.dim(), params.step);
            if (params.lambda == 1.0) {
                std::copy(v_old, v_old + dim, v_new);
                break;
            }
            if (params.lambda == 0.0) {
                std::copy(r.begin(), r.end(), v_new);
                break;
            }
            double norm2 = 0.0;
            for (std::size_t d = 0; d < dim; ++d) {
                blend[d] = (1.0 - params.lambda) * r[d] + params.lambda * v_old[d];
                norm2 += blend[d] * blend[d];
            }
            if (norm2 == 0.0) continue;  // r exactly opposite the old velocity
            const double scale = params.step / std::sqrt(norm2);
            for (std::size_t d = 0; d < dim; ++d) v_new[d] = blend[d] * scale;
            break;
        }
        for (std::size_t d = 0; d < dim; ++d) next.centers[m * dim + d] = state.centers[m * dim + d] + v_new[d];

        next.heights[m] = params.height.clip(next.heights[m]);
        next.widths[m] = params.width.clip(next.widths[m]);
        next.box.clip(std::span<double>(next.centers.data() + m * dim, dim));
    }
    return next;
}

double value_unchecked(const ConicPeaksState& state, std::span<const double> x) {
    const std::size_t dim = x.size();
    double best = -std::numeric_limits<double>::infinity();
    const double* c = state.centers.data();
    for (int m = 0; m < state.peaks; ++m, c += dim) {
        double dist2 = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
            const double diff = x[d] - c[d];
            dist2 += diff * diff;
        }
        best = std::max(best, state.heights[m] - state.widths[m] * std::sqrt(dist2));
    }
    return best;
}

double value(const ConicPeaksState& state, std::span<const double> x) {
    check_point(state.box, x);
    return value_unchecked(state, x);
}

Optimum optimum(const ConicPeaksState& state) {
    const auto it = std::max_element(state.heights.begin(), state.heights.end());
    const auto m = static_cast<int>(it - state.heights.begin());
    const auto c = state.center(m);
    return {std::vector<double>(c.begin(), c.end()), *it};
}

double lipschitz_constant(const ConicPeaksState& state) {
    return *std::max_element(state.widths.begin(), state.widths.end());
}

// ---------------------------------------------------------------------------
// Benchmark 2

RotatingPeaksState initial_state(const RotatingPeaksParams& params, RngState& rng) {
    params.validate();
    const auto dim = static_cast<std::size_t>(params.box.dim);
    const auto peaks = static_cast<std::size_t>(params.peaks);
    RotatingPeaksState s;
    s.box = params.box;
    s.peaks = params.peaks;
    if (params.center_init == CenterInit::grid) {
        s.centers = grid_centers(params.box, params.peaks, rng);
    } else {
        s.centers.resize(peaks * dim);
        for (double& c : s.centers) c = sample_uniform(rng, params.box.lo, params.box.hi);
    }
    s.heights.resize(peaks * dim);
    s.widths.resize(peaks * dim);
    for (std::size_t i = 0; i < peaks * dim; ++i) {
        s.heights[i] = sample_uniform(rng, params.height.lo, params.height.hi);
        s.widths[i] = sample_uniform(rng, params.width.lo, params.width.hi);
    }
    s.angles.assign(dim - 1, params.angle_init);
    return s;
}

Eigen::MatrixXd rotation_matrix(std::span<const double> angles) {
    const auto dim = static_cast<Eigen::Index>(angles.size() + 1);
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(dim, dim);
    for (Eigen::Index d = 0; d + 1 < dim; ++d) {
        const double c = std::cos(angles[static_cast<std::size_t>(d)]);
        const double s = std::sin(angles[static_cast<std::size_t>(d)]);
        // Left-multiply by the plane rotation: only rows d and d+1 change.
        const Eigen::RowVectorXd row_d = r.row(d);
        const Eigen::RowVectorXd row_e = r.row(d + 1);
        r.row(d) = c * row_d - s * row_e;
        r.row(d + 1) = s * row_d + c * row_e;
    }
    return r;
}

RotatingPeaksState advance(const RotatingPeaksState& state, const RotatingPeaksParams& params,
                           RngState& rng) {
    const auto dim = static_cast<std::size_t>(state.dim());
    RotatingPeaksState next = state;
    for (std::size_t i = 0; i < next.heights.size(); ++i) {
        next.heights[i] = params.height.clip(state.heights[i] + params.sigma_height * sample_normal(rng));
        next.widths[i] = params.width.clip(state.widths[i] + params.sigma_width * sample_normal(rng));
    }
    const Eigen::MatrixXd rot = rotation_matrix(state.angles);
    for (std::size_t m = 0; m < static_cast<std::size_t>(state.peaks); ++m) {
        const Eigen::Map<const Eigen::VectorXd> c_old(state.centers.data() + m * dim, static_cast<Eigen::Index>(dim));
        Eigen::Map<Eigen::VectorXd> c_new(next.centers.data() + m * dim, static_cast<Eigen::Index>(dim));
        c_new = rot * c_old;
        next.box.clip(std::span<double>(next.centers.data() + m * dim, dim));
    }
    for (std::size_t d = 0; d + 1 < dim; ++d)
        next.angles[d] = params.angle.clip(state.angles[d] + params.sigma_angle * sample_normal(rng));
    return next;
}

double value_unchecked(const RotatingPeaksState& state, std::span<const double> x) {
    const std::size_t dim = x.size();
    double total = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t m = 0; m < static_cast<std::size_t>(state.peaks); ++m) {
            const std::size_t i = m * dim + d;
            best = std::max(best, state.heights[i] - state.widths[i] * std::abs(x[d] - state.centers[i]));
        }
        total += best;
    }
    return total / static_cast<double>(dim);
}

double value(const RotatingPeaksState& state, std::span<const double> x) {
    check_point(state.box, x);
    return value_unchecked(state, x);
}

Optimum optimum(const RotatingPeaksState& state) {
    const auto dim = static_cast<std::size_t>(state.dim());
    const auto peaks = static_cast<std::size_t>(state.peaks);
    Optimum out;
    out.x.resize(dim);
    double total = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
        // Each 1-D profile is a max of concave tents peaking at the centers,
        // so its maximum over the interval sits on one of them.
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < peaks; ++k) {
            const double xc = state.centers[k * dim + d];
            double v = -std::numeric_limits<double>::infinity();
            for (std::size_t m = 0; m < peaks; ++m) {
                const std::size_t i = m * dim + d;
                v = std::max(v, state.heights[i] - state.widths[i] * std::abs(xc - state.centers[i]));
            }
            if (v > best) {
                best = v;
                out.x[d] = xc;
            }
        }
        total += best;
    }
    out.value = total / static_cast<double>(dim);
    return out;
}

double lipschitz_constant(const RotatingPeaksState& state) {
    const double w = *std::max_element(state.widths.begin(), state.widths.end());
    return w / std::sqrt(static_cast<double>(state.dim()));
}

}  // namespace rootbench
