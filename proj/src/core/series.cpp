#include "core/series.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace vt {

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

bool looks_like_iso_date(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (s[i] < '0' || s[i] > '9') return false;
    const int month = (s[5] - '0') * 10 + (s[6] - '0');
    const int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_number(const std::string& s, std::size_t line_no) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = b + s.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || p != e)
        fail(ErrorCode::parse, "row " + std::to_string(line_no) + ": unparseable number '" + s + "'");
    return v;
}

} // namespace

ReturnSeries::ReturnSeries(std::vector<std::string> timestamps, std::vector<double> values,
                           std::string label)
    : timestamps_(std::move(timestamps)), values_(std::move(values)), label_(std::move(label)) {
    if (timestamps_.size() != values_.size())
        fail(ErrorCode::invalid_argument, "series '" + label_ + "': " +
                                              std::to_string(timestamps_.size()) + " timestamps vs " +
                                              std::to_string(values_.size()) + " values");
    for (std::size_t i = 1; i < timestamps_.size(); ++i)
        if (timestamps_[i] <= timestamps_[i - 1])
            fail(ErrorCode::invalid_argument, "series '" + label_ + "': timestamps not strictly increasing at index " +
                                                  std::to_string(i) + " ('" + timestamps_[i] + "')");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!(values_[i] > -1.0))
            fail(ErrorCode::invalid_argument, "series '" + label_ + "': return <= -100% at index " +
                                                  std::to_string(i));
}

ReturnSeries load_csv(const std::string& path, const std::string& date_column,
                      const std::string& value_column, ValueKind kind) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io, "cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) fail(ErrorCode::parse, "'" + path + "': empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const auto header = split_csv_line(line);
    std::size_t date_idx = header.size(), value_idx = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == date_column) date_idx = i;
        if (header[i] == value_column) value_idx = i;
    }
    if (date_idx == header.size())
        fail(ErrorCode::parse, "'" + path + "': missing column '" + date_column + "'");
    if (value_idx == header.size())
        fail(ErrorCode::parse, "'" + path + "': missing column '" + value_column + "'");

    std::vector<std::string> dates;
    std::vector<double> raw;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (in.peek() == EOF) break; // tolerate one trailing newline
            fail(ErrorCode::parse, "row " + std::to_string(line_no) + ": empty row");
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            fail(ErrorCode::parse, "row " + std::to_string(line_no) + ": expected " +
                                       std::to_string(header.size()) + " fields, got " +
                                       std::to_string(fields.size()));
        const std::string& date = fields[date_idx];
        if (!looks_like_iso_date(date))
            fail(ErrorCode::parse, "row " + std::to_string(line_no) + ": bad date '" + date + "' (want YYYY-MM-DD)");
        if (!dates.empty() && date <= dates.back())
            fail(ErrorCode::parse, "row " + std::to_string(line_no) + ": date '" + date +
                                       "' not after previous row");
        const double value = parse_number(fields[value_idx], line_no);
        if (kind == ValueKind::price && !(value > 0.0))
            fail(ErrorCode::parse, "row " + std::to_string(line_no) + ": non-positive price");
        dates.push_back(date);
        raw.push_back(value);
    }

    switch (kind) {
    case ValueKind::price: {
        if (raw.size() < 2) fail(ErrorCode::insufficient_data, "'" + path + "': need at least two prices");
        std::vector<std::string> ts(dates.begin() + 1, dates.end());
        std::vector<double> rets(raw.size() - 1);
        for (std::size_t i = 1; i < raw.size(); ++i) rets[i - 1] = raw[i] / raw[i - 1] - 1.0;
        return ReturnSeries(std::move(ts), std::move(rets), value_column);
    }
    case ValueKind::simple_return:
        return ReturnSeries(std::move(dates), std::move(raw), value_column);
    case ValueKind::annual_rate: {
        for (double& v : raw) v = v / 100.0 / periods_per_year;
        return ReturnSeries(std::move(dates), std::move(raw), value_column);
    }
    }
    fail(ErrorCode::invalid_argument, "unknown value kind");
}

void SynthSpec::validate() const {
    if (length <= 0) fail(ErrorCode::invalid_argument, "synth: length must be positive");
    if (vols.empty()) fail(ErrorCode::invalid_argument, "synth: need at least one vol");
    for (double v : vols)
        if (!(v >= 0.0)) fail(ErrorCode::invalid_argument, "synth: vols must be nonnegative");
    if (kind == SynthKind::iid_normal) {
        if (vols.size() != 1 || !switch_points.empty())
            fail(ErrorCode::invalid_argument, "synth: iid spec takes exactly one vol and no switch points");
    } else {
        if (vols.size() != switch_points.size() + 1)
            fail(ErrorCode::invalid_argument, "synth: regime spec needs one more vol than switch points");
        for (std::size_t i = 0; i < switch_points.size(); ++i) {
            if (switch_points[i] >= length)
                fail(ErrorCode::invalid_argument, "synth: switch point past end of series");
            if (i > 0 && switch_points[i] <= switch_points[i - 1])
                fail(ErrorCode::invalid_argument, "synth: switch points must be strictly increasing");
            if (switch_points[i] < 0)
                fail(ErrorCode::invalid_argument, "synth: switch points must be nonnegative");
        }
    }
}

namespace {

// Synthetic timestamps: consecutive calendar days from a fixed origin.
std::string synth_timestamp(std::int64_t i) {
    using namespace std::chrono;
    const sys_days origin = sys_days{year{2000} / month{1} / day{3}};
    const year_month_day ymd{origin + days{i}};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

} // namespace

ReturnSeries generate(const SynthSpec& spec) {
    spec.validate();
    NormalSampler rng(spec.seed);
    std::vector<std::string> ts(static_cast<std::size_t>(spec.length));
    std::vector<double> vals(static_cast<std::size_t>(spec.length));
    std::size_t regime = 0;
    for (std::int64_t i = 0; i < spec.length; ++i) {
        while (regime < spec.switch_points.size() && i >= spec.switch_points[regime]) ++regime;
        const double vol = spec.vols[regime];
        double r = rng.normal(spec.mean, vol);
        while (!(r > -1.0)) r = rng.normal(spec.mean, vol);
        ts[static_cast<std::size_t>(i)] = synth_timestamp(i);
        vals[static_cast<std::size_t>(i)] = r;
    }
    return ReturnSeries(std::move(ts), std::move(vals),
                        spec.kind == SynthKind::iid_normal ? "synth-iid" : "synth-regime");
}

ReturnSeries constant_like(const ReturnSeries& like, double value, const std::string& label) {
    return ReturnSeries(like.timestamps(), std::vector<double>(like.size(), value), label);
}

std::pair<ReturnSeries, ReturnSeries> inner_join(const ReturnSeries& a, const ReturnSeries& b) {
    std::unordered_set<std::string> in_b(b.timestamps().begin(), b.timestamps().end());
    std::vector<std::string> ts;
    std::vector<double> av, bv;
    std::size_t j = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!in_b.count(a.timestamps()[i])) continue;
        while (j < b.size() && b.timestamps()[j] != a.timestamps()[i]) ++j;
        if (j == b.size()) break;
        ts.push_back(a.timestamps()[i]);
        av.push_back(a.values()[i]);
        bv.push_back(b.values()[j]);
    }
    if (ts.empty()) fail(ErrorCode::insufficient_data, "inner_join: no common timestamps");
    return {ReturnSeries(ts, std::move(av), a.label()), ReturnSeries(ts, std::move(bv), b.label())};
}

} // namespace vt
