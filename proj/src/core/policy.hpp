#pragma once

#include <cmath>

#include "core/errors.hpp"

namespace vt {

/// Volatility target and leverage limit for an index.
struct TargetSpec {
    double sigma_target = 0.0;   // per-period target volatility, > 0
    double leverage_limit = 0.0; // hard cap on the risky weight, > 0

    void validate() const {
        if (!(sigma_target > 0.0)) throw Error(ErrorCode::invalid_argument, "target volatility must be positive");
        if (!(leverage_limit > 0.0)) throw Error(ErrorCode::invalid_argument, "leverage limit must be positive");
    }
};

/// Parameters of the proportional volatility controller.
///
/// theta = 0 (no output smoothing) is a degenerate diagnostic mode and must
/// be opted into via allow_unsmoothed; gain = 0 is accepted and disables
/// feedback, which the parameter grid relies on.
struct ControllerConfig {
    double gain = 0.0;       // proportional gain g >= 0
    double kappa_min = 0.0;  // lower clip bound, < 0
    double kappa_max = 0.0;  // upper clip bound, > 0
    double theta = 0.0;      // output smoothing factor, in (0,1)
    bool allow_unsmoothed = false;

    void validate() const {
        if (!(gain >= 0.0)) throw Error(ErrorCode::invalid_argument, "gain must be nonnegative");
        if (!(kappa_min < 0.0)) throw Error(ErrorCode::invalid_argument, "kappa_min must be negative");
        if (!(kappa_max > 0.0)) throw Error(ErrorCode::invalid_argument, "kappa_max must be positive");
        if (!(theta >= 0.0 && theta < 1.0)) throw Error(ErrorCode::invalid_argument, "theta must be in [0,1)");
        if (theta == 0.0 && !allow_unsmoothed)
            throw Error(ErrorCode::invalid_argument, "theta = 0 disables smoothing; set allow_unsmoothed to use it");
    }
};

/// Controller state: the current log-space risk-target adjustment.
struct ControllerState {
    double kappa = 0.0; // stays in [kappa_min, kappa_max] once updated
};

/// Index weights. risky + cash = 1 exactly; 0 <= risky <= leverage limit.
struct Weights {
    double risky = 0.0;
    double cash = 0.0;
};

inline double clip(double t, double lo, double hi) {
    if (!(lo <= hi)) throw Error(ErrorCode::invalid_argument, "clip: lower bound above upper bound");
    return t < lo ? lo : t > hi ? hi : t;
}

/// Open-loop weight rule: risky = min(sigma_target / sigma_hat, L).
inline Weights open_loop_weights(const TargetSpec& spec, double sigma_hat) {
    if (!(sigma_hat > 0.0))
        throw Error(ErrorCode::numeric, "risky volatility estimate must be positive");
    const double w = std::min(spec.sigma_target / sigma_hat, spec.leverage_limit);
    return {w, 1.0 - w};
}

/// Log-space volatility tracking error: log(sigma_ind_hat / sigma_target).
inline double tracking_error(double sigma_ind_hat, const TargetSpec& spec) {
    if (!(sigma_ind_hat > 0.0))
        throw Error(ErrorCode::numeric, "index volatility estimate must be positive");
    return std::log(sigma_ind_hat / spec.sigma_target);
}

/// Controller update: kappa <- (1 - theta) * clip(-g * e) + theta * kappa.
/// The clip interval is the only windup guard; a convex combination of two
/// in-range values keeps kappa in [kappa_min, kappa_max] given kappa_0 = 0.
inline ControllerState update_kappa(const ControllerState& state, const ControllerConfig& cfg, double e) {
    const double clipped = clip(-cfg.gain * e, cfg.kappa_min, cfg.kappa_max);
    return {(1.0 - cfg.theta) * clipped + cfg.theta * state.kappa};
}

/// Closed-loop weight rule: risky = min(exp(kappa) * sigma_target / sigma_hat, L).
inline Weights control_weights(const TargetSpec& spec, const ControllerState& state, double sigma_hat) {
    if (!(sigma_hat > 0.0))
        throw Error(ErrorCode::numeric, "risky volatility estimate must be positive");
    const double w = std::min(std::exp(state.kappa) * spec.sigma_target / sigma_hat, spec.leverage_limit);
    return {w, 1.0 - w};
}

} // namespace vt
