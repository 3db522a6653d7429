#include "core/metrics.hpp"

#include <cmath>
#include <numeric>

#include <json.hpp>

#include "core/estimator.hpp"
#include "core/format.hpp"

namespace vt {

double vol_tracking_mae(std::span<const double> sigma_estimates, double sigma_target,
                        std::size_t window_start) {
    if (window_start >= sigma_estimates.size())
        throw Error(ErrorCode::insufficient_data, "tracking-error window is empty");
    double acc = 0.0;
    for (std::size_t i = window_start; i < sigma_estimates.size(); ++i) {
        if (!std::isfinite(sigma_estimates[i]))
            throw Error(ErrorCode::invalid_argument, "non-finite volatility estimate in tracking-error window");
        acc += std::abs(sigma_estimates[i] - sigma_target);
    }
    return acc / static_cast<double>(sigma_estimates.size() - window_start) * std::sqrt(periods_per_year);
}

double max_drawdown(const ReturnSeries& returns) {
    if (returns.size() == 0) throw Error(ErrorCode::insufficient_data, "max_drawdown of empty series");
    double value = 1.0, peak = 1.0, worst = 0.0;
    for (double r : returns.values()) {
        value *= 1.0 + r;
        peak = std::max(peak, value);
        worst = std::max(worst, 1.0 - value / peak);
    }
    return worst;
}

namespace {

struct ReturnStats {
    double ann_return;
    double ann_return_arith;
    double ann_vol;
    std::optional<double> sharpe;
};

ReturnStats return_stats(std::span<const double> returns, std::span<const double> riskfree) {
    const std::size_t n = returns.size();
    if (n == 0) throw Error(ErrorCode::insufficient_data, "metrics over an empty return window");
    double log_growth = 0.0, sum = 0.0, excess = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        log_growth += std::log1p(returns[i]);
        sum += returns[i];
        excess += returns[i] - riskfree[i];
    }
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double r : returns) ss += (r - mean) * (r - mean);
    const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;

    ReturnStats s{};
    s.ann_return = std::expm1(log_growth * periods_per_year / static_cast<double>(n));
    s.ann_return_arith = mean * periods_per_year;
    s.ann_vol = sd * std::sqrt(periods_per_year);
    if (s.ann_vol > 0.0)
        s.sharpe = excess / static_cast<double>(n) * periods_per_year / s.ann_vol;
    return s;
}

MetricsReport assemble(std::span<const double> returns, std::span<const double> riskfree,
                       const ReturnSeries& value_path, std::span<const double> sigma_estimates,
                       double sigma_target, std::size_t te_start, double turnover_total) {
    MetricsReport m{};
    const ReturnStats s = return_stats(returns, riskfree);
    m.ann_return = s.ann_return;
    m.ann_return_arith = s.ann_return_arith;
    m.ann_vol = s.ann_vol;
    m.sharpe = s.sharpe;
    m.max_drawdown = max_drawdown(value_path);
    if (m.max_drawdown > 0.0) m.kalmar = m.ann_return / m.max_drawdown;
    m.tracking_error_mae = vol_tracking_mae(sigma_estimates, sigma_target, te_start);
    m.turnover = turnover_total;
    m.turnover_per_annum = turnover_total * periods_per_year / static_cast<double>(returns.size());
    return m;
}

} // namespace

MetricsReport report(const BacktestResult& result, std::int64_t te_window_start) {
    const std::size_t n = result.size();
    if (n < 2) throw Error(ErrorCode::insufficient_data, "backtest too short for metrics");

    // Realized index returns start at step 1 (step 0 is inception).
    std::span<const double> rets(result.index_return.data() + 1, n - 1);
    std::span<const double> rf(result.riskfree.values().data() + 1, n - 1);
    std::span<const double> sig(result.sigma_index.data() + 1, n - 1);

    double turnover_total = 0.0;
    for (std::size_t i = 1; i < n; ++i)
        turnover_total += std::abs(result.weight_risky[i] - result.weight_risky[i - 1]);

    // te_window_start indexes backtest steps; estimates exist from step 1.
    std::int64_t start = te_window_start >= 0 ? te_window_start : result.config.warmup_steps;
    start = std::max<std::int64_t>(start, 1);
    return assemble(rets, rf, result.index_returns(), sig, result.config.target.sigma_target,
                    static_cast<std::size_t>(start - 1), turnover_total);
}

MetricsReport report_series(const ReturnSeries& returns, const ReturnSeries& riskfree,
                            double sigma_target, double halflife, std::int64_t te_window_start) {
    if (returns.timestamps() != riskfree.timestamps())
        throw Error(ErrorCode::invalid_argument, "return and risk-free series are not aligned");
    EwmaState est(halflife);
    std::vector<double> sig(returns.size());
    for (std::size_t i = 0; i < returns.size(); ++i) {
        est.update(returns.values()[i]);
        sig[i] = est.estimate();
    }
    return assemble(returns.values(), riskfree.values(), returns, sig, sigma_target,
                    static_cast<std::size_t>(std::max<std::int64_t>(te_window_start, 0)), 0.0);
}

namespace {

nlohmann::json to_json_obj(const MetricsReport& m) {
    nlohmann::json j;
    j["tracking_error_mae"] = m.tracking_error_mae;
    j["ann_return"] = m.ann_return;
    j["ann_return_arith"] = m.ann_return_arith;
    j["ann_vol"] = m.ann_vol;
    j["sharpe"] = m.sharpe ? nlohmann::json(*m.sharpe) : nlohmann::json(nullptr);
    j["kalmar"] = m.kalmar ? nlohmann::json(*m.kalmar) : nlohmann::json(nullptr);
    j["max_drawdown"] = m.max_drawdown;
    j["turnover"] = m.turnover;
    j["turnover_per_annum"] = m.turnover_per_annum;
    return j;
}

} // namespace

std::string MetricsReport::to_json() const { return to_json_obj(*this).dump(2); }

void MetricsReport::write_csv(const std::string& path) const {
    auto out = open_output(path);
    out << "tracking_error_mae,ann_return,ann_return_arith,ann_vol,sharpe,kalmar,max_drawdown,"
           "turnover,turnover_per_annum\n";
    out << fmt_double(tracking_error_mae) << ',' << fmt_double(ann_return) << ','
        << fmt_double(ann_return_arith) << ',' << fmt_double(ann_vol) << ','
        << (sharpe ? fmt_double(*sharpe) : "") << ',' << (kalmar ? fmt_double(*kalmar) : "") << ','
        << fmt_double(max_drawdown) << ',' << fmt_double(turnover) << ','
        << fmt_double(turnover_per_annum) << '\n';
}

} // namespace vt
