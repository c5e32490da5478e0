#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wulff/report.hpp"
#include "wulff/theorem_suite.hpp"
#include "wulff/wulff_pipeline.hpp"

namespace wulff {

using Json = nlohmann::ordered_json;

struct PresetRef {
    std::string name;
};

struct ShapeSpec {
    std::variant<ConstantGamma, EllipseGamma, PolygonGamma, SampledGamma, PresetRef> shape;
    /// Direction count; absent means kDefaultDirections.
    std::optional<std::size_t> k;

    std::size_t directions() const { return k.value_or(kDefaultDirections); }
    std::string_view kind() const;
};

/// Throws ParseError with the byte offset for malformed JSON, and the
/// underlying error prefixed by the field path for bad values.
ShapeSpec parse_shape_spec(std::string_view text);
std::string emit_shape_spec(const ShapeSpec& spec);
/// The support function of a non-preset spec, or of a preset that has one.
std::optional<SupportFunction> support_function(const ShapeSpec& spec);

struct RunConfig {
    SuiteConfig suite;
    std::optional<std::string> out;
};

/// Keys: seed, trials, tol, tolerances, only, threads, k, out.
RunConfig parse_run_config(std::string_view text);
Json run_config_json(const RunConfig& config);

enum class FloatStyle { Fixed17, Shortest };

std::string format_double(double x, FloatStyle style = FloatStyle::Fixed17);
/// Two-space indented JSON in insertion order with a trailing newline.
std::string write_json(const Json& j, FloatStyle style = FloatStyle::Fixed17);

Json report_json(const CheckReport& r);
std::string emit_reports(const std::vector<CheckReport>& reports);
/// Writes emit_reports to path; throws InvalidArgument when the file cannot be written.
void emit_report(const std::vector<CheckReport>& reports, const std::string& path);
void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

/// Primal boundary solid, dual boundary dashed, origin marked.
std::string render_svg(const PlanarConvexBody& primal, const PlanarConvexBody& dual);
/// Columns curve,u,v; each closed boundary repeats its first vertex.
std::string render_csv(const PlanarConvexBody& primal, const PlanarConvexBody& dual);

}  // namespace wulff
