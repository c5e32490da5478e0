#include "wulff/commands.hpp"

#include "wulff/errors.hpp"
#include "wulff/presets.hpp"
#include "wulff/width_metrics.hpp"

namespace wulff {

namespace {

Json vertices_json(const PlanarConvexBody& b) {
    Json a = Json::array();
    for (const Vec2& p : b.vertices()) a.push_back(Json::array({p.x, p.y}));
    return a;
}

Json point_json(const SphericalPoint& p) { return Json::array({p.x(), p.y(), p.z()}); }

const PlanarConvexBody& planar_shape(const BodyUnderTest& b) {
    if (!b.wulff) fail(ErrorCode::InvalidArgument, "preset " + b.label + " has no planar Wulff shape");
    return *b.wulff;
}

CommandOutput reports_output(const std::vector<CheckReport>& reports) {
    bool ok = true;
    for (const CheckReport& r : reports) ok = ok && r.passed();
    return {emit_reports(reports), ok ? kExitOk : kExitCheckFailed};
}

}  // namespace

BodyUnderTest body_under_test(const ShapeSpec& spec) {
    const std::size_t k = spec.directions();
    if (const auto* p = std::get_if<PresetRef>(&spec.shape)) return preset_under_test(*find_preset(p->name), k);
    return wulff_under_test(std::string(spec.kind()), wulff_shape(*support_function(spec), k), k);
}

std::string cmd_build(const ShapeSpec& spec) {
    const BodyUnderTest b = body_under_test(spec);
    const PlanarConvexBody& w = planar_shape(b);
    Json j;
    j["kind"] = spec.kind();
    j["k"] = spec.directions();
    j["vertex_count"] = w.size();
    j["vertices"] = vertices_json(w);
    return write_json(j);
}

std::string cmd_dual(const ShapeSpec& spec, const CommandOptions& opts) {
    const BodyUnderTest b = body_under_test(spec);
    const WulffPair pair = is_self_dual(planar_shape(b), opts.tol.value_or(b.selfdual_tol));
    Json j;
    j["primal"] = vertices_json(pair.primal);
    j["dual"] = vertices_json(pair.dual);
    j["hausdorff"] = pair.hausdorff_distance;
    j["self_dual"] = pair.self_dual;
    j["tolerance"] = opts.tol.value_or(b.selfdual_tol);
    return write_json(j);
}

std::string cmd_metrics(const ShapeSpec& spec, const CommandOptions& opts) {
    const BodyUnderTest b = body_under_test(spec);
    const double tol = opts.tol.value_or(b.tol);
    const WidthReport w = is_constant_width(b.body, tol);
    const DiameterReport d = is_constant_diameter(b.body, tol);
    Json width;
    width["min"] = w.min_width;
    width["max"] = w.max_width;
    width["argmin_center"] = point_json(w.argmin_center);
    width["argmax_center"] = point_json(w.argmax_center);
    width["constant"] = w.constant;
    if (w.constant) width["delta"] = w.delta;
    Json diam;
    diam["value"] = d.diameter;
    diam["witness_p"] = point_json(d.witness_p);
    diam["witness_q"] = point_json(d.witness_q);
    diam["constant"] = d.constant;
    diam["min_farthest"] = d.min_farthest;
    Json j;
    j["body"] = b.label;
    j["tolerance"] = tol;
    j["width"] = width;
    j["thickness"] = thickness(b.body);
    j["diameter"] = diam;
    return write_json(j);
}

CommandOutput cmd_check(const RunConfig& config) { return reports_output(run_all(config.suite)); }

CommandOutput cmd_check(const ShapeSpec& spec, const SuiteConfig& config) {
    SuiteConfig c = config;
    c.samples = spec.directions();
    return reports_output(run_body_checks(body_under_test(spec), c));
}

RenderOutput cmd_render(const ShapeSpec& spec) {
    const BodyUnderTest b = body_under_test(spec);
    const PlanarConvexBody& w = planar_shape(b);
    const PlanarConvexBody dual = dual_wulff(w);
    return {render_svg(w, dual), render_csv(w, dual)};
}

std::string error_json(std::string_view code, std::string_view message) {
    Json e;
    e["code"] = code;
    e["message"] = message;
    Json j;
    j["error"] = e;
    return write_json(j);
}

}  // namespace wulff
