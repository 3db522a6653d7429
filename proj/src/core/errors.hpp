#pragma once

#include <stdexcept>
#include <string>

namespace vt {

// Coarse failure categories; the C API maps these 1:1 onto status codes.
enum class ErrorCode {
    invalid_argument,
    io,
    parse,
    numeric,
    insufficient_data,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace vt
