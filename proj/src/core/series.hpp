#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vt {

/// Trading periods per year; all annualization in the library uses this.
inline constexpr double periods_per_year = 252.0;

/// Time-indexed simple returns for one asset. Timestamps are opaque ordered
/// labels (ISO-8601 dates in practice); there is no calendar arithmetic.
///
/// Invariants, enforced at construction: timestamps strictly increasing and
/// the same length as values; every value > -1.
class ReturnSeries {
public:
    ReturnSeries(std::vector<std::string> timestamps, std::vector<double> values,
                 std::string label);

    const std::vector<std::string>& timestamps() const noexcept { return timestamps_; }
    const std::vector<double>& values() const noexcept { return values_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<std::string> timestamps_;
    std::vector<double> values_;
    std::string label_;
};

enum class ValueKind {
    price,       // converted via r_k = p_k / p_{k-1} - 1
    simple_return, // passed through
    annual_rate, // annualized percentage rate -> rate / 100 / 252 per period
};

/// Load one column of a CSV file as a ReturnSeries.
///
/// The file must have a header row, ISO-8601 dates (YYYY-MM-DD) in
/// `date_column`, and decimal-point numbers in `value_column`. Malformed rows
/// are hard errors reported with their file line number.
ReturnSeries load_csv(const std::string& path, const std::string& date_column,
                      const std::string& value_column, ValueKind kind);

enum class SynthKind { iid_normal, regime_switch };

/// Recipe for a synthetic return series: i.i.d. normal draws, or normal draws
/// whose standard deviation switches between regimes at fixed step indices.
struct SynthSpec {
    SynthKind kind = SynthKind::iid_normal;
    double mean = 0.0;                      // per-period
    std::vector<double> vols;               // per-period; one per regime
    std::vector<std::int64_t> switch_points; // strictly increasing, < length
    std::int64_t length = 0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Draw a series per `spec`. Deterministic for a fixed seed. Draws at or
/// below -100% are redrawn so the ReturnSeries invariant always holds.
ReturnSeries generate(const SynthSpec& spec);

/// Constant per-period return on the same timestamps as `like`.
ReturnSeries constant_like(const ReturnSeries& like, double value, const std::string& label);

/// Intersection of two series on common timestamps, order preserved.
std::pair<ReturnSeries, ReturnSeries> inner_join(const ReturnSeries& a, const ReturnSeries& b);

} // namespace vt
