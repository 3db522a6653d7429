#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/policy.hpp"
#include "core/series.hpp"

namespace vt {

/// Full configuration of one backtest run.
struct BacktestConfig {
    TargetSpec target;
    double estimator_halflife = 126.0; // shared by the asset and index estimators
    std::optional<ControllerConfig> controller; // absent = open-loop throughout
    std::int64_t warmup_steps = 10;    // steps before control engages (>= 1)
    double spread_bps = 5.0;           // round-trip bid-ask spread, basis points
    bool charge_full_spread = false;   // default: half spread per trade leg

    void validate() const;

    /// Cost per unit of absolute weight change.
    double cost_rate() const {
        return spread_bps * 1e-4 * (charge_full_spread ? 1.0 : 0.5);
    }
};

/// Per-step trajectory of a backtest. All columns have one entry per input
/// step. Step 0 is index inception: index_return is 0 by convention and
/// sigma_index / tracking_error are NaN (the index estimator starts from the
/// first realized index return).
struct BacktestResult {
    ReturnSeries risky;
    ReturnSeries riskfree;
    BacktestConfig config;

    std::vector<double> weight_risky;
    std::vector<double> weight_cash;
    std::vector<double> index_return;
    std::vector<double> sigma_risky;
    std::vector<double> sigma_index;
    std::vector<double> tracking_err;
    std::vector<double> kappa;
    std::vector<double> cost; // cost realized in this step's index return

    std::size_t size() const noexcept { return weight_risky.size(); }

    /// Realized index returns (steps 1..n-1) as a series.
    ReturnSeries index_returns() const;

    /// Tidy per-step CSV; one row per step, fixed column names.
    void write_csv(const std::string& path) const;
    void write_json(const std::string& path) const;
};

/// One-period index return for the weights decided at the previous step:
/// r_ind = r_risky * w + r_riskfree * c. Negative cash pays the risk-free
/// rate symmetrically.
inline double step_index_return(double r_risky, double r_riskfree, const Weights& prev) {
    return r_risky * prev.risky + r_riskfree * prev.cash;
}

/// Run the simulation loop over aligned risky and risk-free return series.
///
/// At each step the estimators are updated with the step's returns before the
/// weight is decided, so the estimates are known at decision time. Steps
/// 1..warmup use the open-loop rule with kappa frozen at 0; afterwards the
/// configured policy applies. The trade decided at step k (|w_k - w_{k-1}|,
/// costed at cost_rate) executes at that step's close and its cost is
/// realized in the index return of step k+1; recorded index returns are
/// therefore net of every realized cost and the in-loop index estimator sees
/// exactly the recorded sequence.
BacktestResult run(const ReturnSeries& risky, const ReturnSeries& riskfree, const BacktestConfig& cfg);

} // namespace vt
