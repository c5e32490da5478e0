#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wulff {

enum class ErrorCode {
    InvalidArgument,
    InvariantViolation,
    EquatorialPoint,
    PoleInput,
    NotHemispherical,
    Degenerate,
    NotOnBoundary,
    NotSupporting,
    NotInterior,
    Unbounded,
    EmptyInterior,
    ParseError,
};

std::string_view error_code_name(ErrorCode code);

class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw GeometryError(code, message);
}

}  // namespace wulff
