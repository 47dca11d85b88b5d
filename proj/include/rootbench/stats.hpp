// stats.hpp
// Goodness-of-fit helpers for the sampler checks.
#pragma once

#include <span>

namespace rootbench::stats {

/// Pearson chi-square statistic of observed counts against equal expected counts.
double chi_square_uniform_statistic(std::span<const double> counts);

/// Upper-tail p-value of the equal-probability chi-square test.
double chi_square_uniform_pvalue(std::span<const double> counts);

/// Kolmogorov-Smirnov statistic of a sample against a CDF.
template <class Cdf>
double ks_statistic(std::span<const double> sorted_sample, Cdf cdf);

/// Asymptotic Kolmogorov p-value for statistic d at sample size n.
double ks_pvalue(double d, std::size_t n);

double normal_cdf(double x);

template <class Cdf>
double ks_statistic(std::span<const double> sorted_sample, Cdf cdf) {
    const double n = static_cast<double>(sorted_sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
        const double f = cdf(sorted_sample[i]);
        const double lo = f - static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n - f;
        d = lo > d ? lo : d;
        d = hi > d ? hi : d;
    }
    return d;
}

}  // namespace rootbench::stats
