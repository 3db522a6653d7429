#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "core/errors.hpp"

namespace vt {

/// Shortest exact decimal form used by every CSV writer; %.17g round-trips
/// doubles bit-exactly.
inline std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// NaN renders as an empty CSV field.
inline std::string fmt_field(double v) { return std::isnan(v) ? std::string() : fmt_double(v); }

inline std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io, "cannot write '" + path + "'");
    return out;
}

} // namespace vt
