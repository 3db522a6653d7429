#include "core/backtest.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "core/estimator.hpp"
#include "core/format.hpp"

namespace vt {

namespace {
constexpr double nan = std::numeric_limits<double>::quiet_NaN();
}

void BacktestConfig::validate() const {
    target.validate();
    if (!(estimator_halflife > 0.0)) throw Error(ErrorCode::invalid_argument, "halflife must be positive");
    if (warmup_steps < 1) throw Error(ErrorCode::invalid_argument, "warmup_steps must be at least 1");
    if (!(spread_bps >= 0.0)) throw Error(ErrorCode::invalid_argument, "spread_bps must be nonnegative");
    if (controller) controller->validate();
}

BacktestResult run(const ReturnSeries& risky, const ReturnSeries& riskfree, const BacktestConfig& cfg) {
    cfg.validate();
    if (risky.timestamps() != riskfree.timestamps())
        throw Error(ErrorCode::invalid_argument, "risky and risk-free series are not aligned on the same timestamps");
    const std::size_t n = risky.size();
    if (n <= static_cast<std::size_t>(cfg.warmup_steps))
        throw Error(ErrorCode::insufficient_data, "series shorter than the warmup period");

    BacktestResult res{risky, riskfree, cfg, {}, {}, {}, {}, {}, {}, {}, {}};
    for (auto* col : {&res.weight_risky, &res.weight_cash, &res.index_return, &res.sigma_risky,
                      &res.sigma_index, &res.tracking_err, &res.kappa, &res.cost})
        col->resize(n);

    EwmaState est_risky(cfg.estimator_halflife);
    EwmaState est_index(cfg.estimator_halflife);
    ControllerState ctl{0.0};
    const double cost_rate = cfg.cost_rate();

    Weights prev{};
    double pending_cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = risky.values()[i];
        const double rf = riskfree.values()[i];

        est_risky.update(r);
        const double sigma_hat = est_risky.estimate();

        double ind = 0.0, sigma_ind = nan, err = nan, paid = 0.0;
        if (i >= 1) {
            paid = pending_cost;
            ind = step_index_return(r, rf, prev) - paid;
            if (!(ind > -1.0))
                throw Error(ErrorCode::numeric, "index return <= -100% at step " + std::to_string(i + 1) +
                                                    " (leveraged wipeout)");
            est_index.update(ind);
            sigma_ind = est_index.estimate();
            if (sigma_ind > 0.0) err = tracking_error(sigma_ind, cfg.target);
        }

        // Decide w_k with this step's estimates in hand. Steps 1..warmup run
        // open-loop with kappa frozen at 0.
        const std::int64_t step = static_cast<std::int64_t>(i) + 1;
        Weights w{};
        if (cfg.controller && step > cfg.warmup_steps) {
            if (!(sigma_ind > 0.0))
                throw Error(ErrorCode::numeric, "index volatility estimate is zero at step " +
                                                    std::to_string(step) + "; cannot engage control");
            ctl = update_kappa(ctl, *cfg.controller, err);
            w = control_weights(cfg.target, ctl, sigma_hat);
        } else {
            w = open_loop_weights(cfg.target, sigma_hat);
        }
        if (i >= 1) pending_cost = cost_rate * std::abs(w.risky - prev.risky);

        res.weight_risky[i] = w.risky;
        res.weight_cash[i] = w.cash;
        res.index_return[i] = ind;
        res.sigma_risky[i] = sigma_hat;
        res.sigma_index[i] = sigma_ind;
        res.tracking_err[i] = err;
        res.kappa[i] = ctl.kappa;
        res.cost[i] = paid;
        prev = w;
    }
    return res;
}

ReturnSeries BacktestResult::index_returns() const {
    std::vector<std::string> ts(risky.timestamps().begin() + 1, risky.timestamps().end());
    std::vector<double> vals(index_return.begin() + 1, index_return.end());
    return ReturnSeries(std::move(ts), std::move(vals), "index");
}

void BacktestResult::write_csv(const std::string& path) const {
    auto out = open_output(path);
    out << "step,date,risky_return,riskfree_return,weight_risky,weight_cash,index_return,"
           "sigma_risky,sigma_index,tracking_error,kappa,cost\n";
    for (std::size_t i = 0; i < size(); ++i) {
        out << (i + 1) << ',' << risky.timestamps()[i] << ',' << fmt_double(risky.values()[i]) << ','
            << fmt_double(riskfree.values()[i]) << ',' << fmt_double(weight_risky[i]) << ','
            << fmt_double(weight_cash[i]) << ',' << fmt_double(index_return[i]) << ','
            << fmt_double(sigma_risky[i]) << ',' << fmt_field(sigma_index[i]) << ','
            << fmt_field(tracking_err[i]) << ',' << fmt_double(kappa[i]) << ',' << fmt_double(cost[i])
            << '\n';
    }
}

void BacktestResult::write_json(const std::string& path) const {
    nlohmann::json j;
    j["steps"] = size();
    j["timestamps"] = risky.timestamps();
    j["risky_return"] = risky.values();
    j["riskfree_return"] = riskfree.values();
    j["weight_risky"] = weight_risky;
    j["weight_cash"] = weight_cash;
    j["index_return"] = index_return;
    j["sigma_risky"] = sigma_risky;
    j["sigma_index"] = sigma_index; // NaN serializes as null
    j["tracking_error"] = tracking_err;
    j["kappa"] = kappa;
    j["cost"] = cost;
    auto out = open_output(path);
    out << j.dump(2) << '\n';
}

} // namespace vt
