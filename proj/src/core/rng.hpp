#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace vt {

/// Seedable normal-deviate source with a pinned identity, so that a given
/// seed yields the same stream on every build.
///
/// Uniforms come from std::mt19937_64 (bit-exact per the C++ standard) via
/// u = (x >> 11) * 2^-53; normals via the Marsaglia polar transform. The only
/// libm call in the pipeline is log(), so streams are reproducible across
/// platforms up to libm rounding of log.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal draw.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace vt
