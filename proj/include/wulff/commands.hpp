#pragma once

#include <optional>
#include <string>

#include "wulff/io.hpp"
#include "wulff/theorem_suite.hpp"

namespace wulff {

struct CommandOptions {
    /// Overrides the tolerance the body would get by default.
    std::optional<double> tol;
};

/// Output text plus the exit status: 0 ok, 1 some check failed.
struct CommandOutput {
    std::string text;
    int status = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Spherical body and tolerances a spec stands for.
BodyUnderTest body_under_test(const ShapeSpec& spec);

std::string cmd_build(const ShapeSpec& spec);
std::string cmd_dual(const ShapeSpec& spec, const CommandOptions& opts = {});
std::string cmd_metrics(const ShapeSpec& spec, const CommandOptions& opts = {});
CommandOutput cmd_check(const RunConfig& config);
CommandOutput cmd_check(const ShapeSpec& spec, const SuiteConfig& config);

struct RenderOutput {
    std::string svg;
    std::string csv;
};
RenderOutput cmd_render(const ShapeSpec& spec);

/// {"error": {"code": ..., "message": ...}}
std::string error_json(std::string_view code, std::string_view message);

}  // namespace wulff
