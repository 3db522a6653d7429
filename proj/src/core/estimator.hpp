#pragma once

#include <cmath>
#include <cstdint>

#include "core/errors.hpp"

namespace vt {

/// Decay factor for an EWMA with the given halflife: exp(-log(2)/h).
inline double decay_from_halflife(double halflife) {
    if (!(halflife > 0.0)) throw Error(ErrorCode::invalid_argument, "halflife must be positive");
    return std::exp(-std::log(2.0) / halflife);
}

struct EwmaParams {
    double halflife = 0.0;
    double decay = 0.0; // beta = exp(-log(2)/halflife), in (0,1)

    static EwmaParams from_halflife(double h) { return {h, decay_from_halflife(h)}; }
};

/// Incremental bias-corrected EWMA second-moment estimator.
///
/// After k updates with returns r_1..r_k the squared estimate equals
///
///     (1 - beta) / (1 - beta^k) * sum_j beta^(k-j) * r_j^2,
///
/// maintained by the recurrences s <- beta*s + r^2 and n <- beta*n + 1 so
/// that no beta^k power is ever formed (n = (1 - beta^k) / (1 - beta)).
/// The k = 1 bias correction makes the first estimate equal |r_1|.
class EwmaState {
public:
    explicit EwmaState(EwmaParams params) : params_(params) {}
    explicit EwmaState(double halflife) : EwmaState(EwmaParams::from_halflife(halflife)) {}

    void update(double r) {
        weighted_sum_ = params_.decay * weighted_sum_ + r * r;
        weight_norm_ = params_.decay * weight_norm_ + 1.0;
        ++count_;
    }

    /// Current volatility estimate (per-period standard deviation).
    double estimate() const {
        if (count_ < 1) throw Error(ErrorCode::insufficient_data, "EWMA estimate requested before any update");
        return std::sqrt(weighted_sum_ / weight_norm_);
    }

    const EwmaParams& params() const noexcept { return params_; }
    double weighted_sum() const noexcept { return weighted_sum_; }
    double weight_norm() const noexcept { return weight_norm_; }
    std::int64_t count() const noexcept { return count_; }

private:
    EwmaParams params_;
    double weighted_sum_ = 0.0;
    double weight_norm_ = 0.0;
    std::int64_t count_ = 0;
};

} // namespace vt
