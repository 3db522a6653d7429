#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "core/backtest.hpp"
#include "core/series.hpp"

namespace vt {

/// The per-run performance metric set. Annualized throughout (252 periods
/// per year); ratios that would divide by zero are reported as absent.
struct MetricsReport {
    double tracking_error_mae = 0.0;   // mean |sigma_hat - sigma_target| * sqrt(252)
    double ann_return = 0.0;           // geometric: (prod(1+r))^(252/n) - 1
    double ann_return_arith = 0.0;     // arithmetic: mean(r) * 252
    double ann_vol = 0.0;              // sample std of returns * sqrt(252)
    std::optional<double> sharpe;      // mean excess return * 252 / ann_vol
    std::optional<double> kalmar;      // ann_return / max_drawdown
    double max_drawdown = 0.0;         // peak-to-trough fraction of the value path
    double turnover = 0.0;             // cumulative sum |dw|
    double turnover_per_annum = 0.0;   // turnover * 252 / steps

    std::string to_json() const;
    void write_csv(const std::string& path) const; // header + one row
};

/// Annualized mean absolute deviation of volatility estimates from the
/// target, over estimates[window_start..]. Estimates must be finite.
double vol_tracking_mae(std::span<const double> sigma_estimates, double sigma_target,
                        std::size_t window_start);

/// Largest peak-to-trough decline of the compounded value path (start 1).
double max_drawdown(const ReturnSeries& returns);

/// Metrics for a backtest trajectory. The tracking-error window defaults to
/// the first post-warmup step; pass te_window_start >= 0 to override.
MetricsReport report(const BacktestResult& result, std::int64_t te_window_start = -1);

/// Metrics for a bare return series (e.g. the underlying asset): volatility
/// estimates are produced with the given halflife, weights are treated as
/// constant (zero turnover).
MetricsReport report_series(const ReturnSeries& returns, const ReturnSeries& riskfree,
                            double sigma_target, double halflife, std::int64_t te_window_start = 0);

} // namespace vt
