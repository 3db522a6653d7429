#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace vt {

/// Recipe for the Monte Carlo sampling-variability band of a volatility
/// estimator: one long synthetic i.i.d. normal return path, the running
/// estimator over it, burn-in discarded, percentiles of the rest.
struct McBandSpec {
    double sigma_true = 0.0;          // per-period true volatility
    std::int64_t n_samples = 10000;   // synthetic returns drawn
    std::int64_t burn_in = 252;       // leading estimates discarded
    double halflife = 126.0;
    std::vector<double> percentiles = {10.0, 90.0}; // sorted, in (0,100)
    std::uint64_t seed = 0;

    void validate() const;
};

struct McBand {
    McBandSpec spec;
    std::vector<double> levels;       // one per requested percentile
    std::vector<double> retained;     // post-burn-in estimates, simulation order

    void write_csv(const std::string& path) const;  // percentile,level rows
    void write_json(const std::string& path) const;
    /// Histogram of the retained estimates with the chi-approximation density
    /// evaluated at bin centers, for external plotting.
    void write_histogram_csv(const std::string& path, std::int64_t n_bins) const;
};

/// Run the Monte Carlo band procedure. Deterministic per seed; errors if
/// fewer than 100 estimates remain after burn-in.
McBand mc_band(const McBandSpec& spec);

/// Scaled chi distribution: estimate ~ scale * chi(dof).
struct ChiApprox {
    double dof = 0.0;
    double scale = 0.0;

    double mean() const;     // scale * E[chi_dof]
    double stddev() const;   // scale * sqrt(dof - E[chi_dof]^2)
    double median() const;
    double cdf(double x) const;
    double pdf(double x) const;
};

/// Exact distribution of an SMA volatility estimate over a window of m
/// i.i.d. N(0, sigma^2) returns: chi with m degrees of freedom, scale
/// sigma/sqrt(m).
ChiApprox sma_distribution(double sigma_true, std::int64_t window);

/// Moment-matched approximation for the infinite-sample EWMA volatility
/// estimate: dof = (1+beta)/(1-beta), scale = sigma*sqrt((1-beta)/(1+beta)).
/// The implied squared-estimate mean is sigma^2 exactly and the variance is
/// 2*sigma^4*(1-beta)/(1+beta) exactly.
ChiApprox ewma_distribution(double sigma_true, double halflife);

/// Standard deviation of the EWMA volatility estimate implied by the chi
/// approximation.
double ewma_estimate_std(double sigma_true, double halflife);

/// Two-sided Kolmogorov-Smirnov statistic of samples against a reference CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

} // namespace vt
