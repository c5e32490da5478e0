#include "wulff/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "wulff/errors.hpp"
#include "wulff/presets.hpp"

namespace wulff {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

Json parse_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::ParseError, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

[[noreturn]] void bad_field(const std::string& path, const std::string& what) {
    fail(ErrorCode::InvalidArgument, path + ": " + what);
}

const Json& object_at(const Json& j, const std::string& path) {
    if (!j.is_object()) bad_field(path.empty() ? "<root>" : path, "expected an object");
    return j;
}

void reject_unknown(const Json& j, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : j.items()) {
        if (!allowed.contains(key)) bad_field(key, "unknown key");
    }
}

const Json& require(const Json& j, const std::string& key) {
    if (!j.contains(key)) bad_field(key, "missing");
    return j.at(key);
}

double number(const Json& j, const std::string& path) {
    if (!j.is_number()) bad_field(path, "expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) bad_field(path, "must be finite");
    return x;
}

double positive(const Json& j, const std::string& path) {
    const double x = number(j, path);
    if (!(x > 0.0)) fail(ErrorCode::InvariantViolation, path + ": must be positive");
    return x;
}

std::uint64_t count(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned()) bad_field(path, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

std::string text(const Json& j, const std::string& path) {
    if (!j.is_string()) bad_field(path, "expected a string");
    return j.get<std::string>();
}

std::vector<Vec2> pairs(const Json& j, const std::string& path) {
    if (!j.is_array()) bad_field(path, "expected an array of [x, y] pairs");
    std::vector<Vec2> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != 2) bad_field(p, "expected a pair");
        out.push_back({number(j[i][0], p + "[0]"), number(j[i][1], p + "[1]")});
    }
    return out;
}

Json pair_array(const std::vector<Vec2>& v) {
    Json a = Json::array();
    for (const Vec2& p : v) a.push_back(Json::array({p.x, p.y}));
    return a;
}

// errors from the support function validation carry the field they came from
template <class F>
auto with_path(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const GeometryError& e) {
        fail(e.code(), path + ": " + e.what());
    }
}

void write_value(std::string& out, const Json& j, FloatStyle style, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close(2 * depth, ' ');
    switch (j.type()) {
        case Json::value_t::number_float: out += format_double(j.get<double>(), style); break;
        case Json::value_t::array:
            if (j.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out += pad;
                write_value(out, j[i], style, depth + 1);
                out += i + 1 < j.size() ? ",\n" : "\n";
            }
            out += close + "]";
            break;
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            std::size_t i = 0;
            for (const auto& [key, value] : j.items()) {
                out += pad + Json(key).dump() + ": ";
                write_value(out, value, style, depth + 1);
                out += ++i < j.size() ? ",\n" : "\n";
            }
            out += close + "}";
            break;
        }
        default: out += j.dump();
    }
}

Json point_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

std::string svg_points(const PlanarConvexBody& b, double scale) {
    std::string s;
    for (const Vec2& p : b.vertices()) {
        if (!s.empty()) s += ' ';
        s += format_double(p.x * scale, FloatStyle::Shortest) + ',' + format_double(-p.y * scale, FloatStyle::Shortest);
    }
    return s;
}

}  // namespace

std::string_view ShapeSpec::kind() const {
    return std::visit(Overloaded{
                          [](const ConstantGamma&) { return std::string_view("constant"); },
                          [](const EllipseGamma&) { return std::string_view("ellipse"); },
                          [](const PolygonGamma&) { return std::string_view("polygon_gamma"); },
                          [](const SampledGamma&) { return std::string_view("sampled"); },
                          [](const PresetRef&) { return std::string_view("preset"); },
                      },
                      shape);
}

ShapeSpec parse_shape_spec(std::string_view input) {
    const Json j = parse_text(input);
    object_at(j, "");
    const std::string kind = text(require(j, "kind"), "kind");
    ShapeSpec spec;
    if (kind == "constant") {
        reject_unknown(j, {"kind", "c", "k"});
        spec.shape = ConstantGamma{positive(require(j, "c"), "c")};
    } else if (kind == "ellipse") {
        reject_unknown(j, {"kind", "a", "b", "k"});
        spec.shape = EllipseGamma{positive(require(j, "a"), "a"), positive(require(j, "b"), "b")};
    } else if (kind == "polygon_gamma") {
        reject_unknown(j, {"kind", "vertices", "k"});
        spec.shape = PolygonGamma{pairs(require(j, "vertices"), "vertices")};
    } else if (kind == "sampled") {
        reject_unknown(j, {"kind", "samples", "k"});
        SampledGamma s;
        for (const Vec2& p : pairs(require(j, "samples"), "samples")) {
            s.theta.push_back(p.x);
            s.gamma.push_back(p.y);
        }
        spec.shape = std::move(s);
    } else if (kind == "preset") {
        reject_unknown(j, {"kind", "name", "k"});
        const std::string name = text(require(j, "name"), "name");
        if (!find_preset(name)) bad_field("name", "unknown preset '" + name + "'");
        spec.shape = PresetRef{name};
    } else {
        bad_field("kind", "unknown kind '" + kind + "'");
    }
    if (j.contains("k")) {
        const std::uint64_t k = count(j["k"], "k");
        if (k < 8) bad_field("k", "direction count must be at least 8");
        spec.k = k;
    }
    const char* field = std::visit(Overloaded{
                                       [](const PolygonGamma&) { return "vertices"; },
                                       [](const SampledGamma&) { return "samples"; },
                                       [](const auto&) { return "kind"; },
                                   },
                                   spec.shape);
    with_path(field, [&] { return support_function(spec); });
    return spec;
}

std::optional<SupportFunction> support_function(const ShapeSpec& spec) {
    return std::visit(Overloaded{
                          [](const PresetRef& p) { return find_preset(p.name)->gamma; },
                          [](const auto& g) { return std::optional<SupportFunction>(SupportFunction(g)); },
                      },
                      spec.shape);
}

std::string emit_shape_spec(const ShapeSpec& spec) {
    Json j;
    j["kind"] = spec.kind();
    std::visit(Overloaded{
                   [&](const ConstantGamma& g) { j["c"] = g.c; },
                   [&](const EllipseGamma& g) {
                       j["a"] = g.a;
                       j["b"] = g.b;
                   },
                   [&](const PolygonGamma& g) { j["vertices"] = pair_array(g.vertices); },
                   [&](const SampledGamma& g) {
                       std::vector<Vec2> s;
                       for (std::size_t i = 0; i < g.theta.size(); ++i) s.push_back({g.theta[i], g.gamma[i]});
                       j["samples"] = pair_array(s);
                   },
                   [&](const PresetRef& p) { j["name"] = p.name; },
               },
               spec.shape);
    if (spec.k) j["k"] = *spec.k;
    return write_json(j, FloatStyle::Shortest);
}

RunConfig parse_run_config(std::string_view input) {
    const Json j = parse_text(input);
    object_at(j, "");
    reject_unknown(j, {"seed", "trials", "tol", "tolerances", "only", "threads", "k", "out"});
    RunConfig rc;
    SuiteConfig& c = rc.suite;
    if (j.contains("seed")) c.seed = count(j["seed"], "seed");
    if (j.contains("trials")) {
        c.trials = count(j["trials"], "trials");
        if (c.trials == 0) bad_field("trials", "must be at least 1");
    }
    if (j.contains("tol")) {
        c.tol = number(j["tol"], "tol");
        if (*c.tol < 0.0) fail(ErrorCode::InvariantViolation, "tol: must be non-negative");
    }
    if (j.contains("tolerances")) {
        object_at(j["tolerances"], "tolerances");
        for (const auto& [key, value] : j["tolerances"].items()) {
            const std::string path = "tolerances." + key;
            const double t = number(value, path);
            if (t < 0.0) fail(ErrorCode::InvariantViolation, path + ": must be non-negative");
            c.tolerances[key] = t;
        }
    }
    if (j.contains("only")) {
        if (!j["only"].is_array()) bad_field("only", "expected an array of check names");
        for (std::size_t i = 0; i < j["only"].size(); ++i) {
            c.only.push_back(text(j["only"][i], "only[" + std::to_string(i) + "]"));
        }
    }
    if (j.contains("threads")) c.threads = count(j["threads"], "threads");
    if (j.contains("k")) {
        c.samples = count(j["k"], "k");
        if (c.samples < 8) bad_field("k", "direction count must be at least 8");
    }
    if (j.contains("out")) rc.out = text(j["out"], "out");
    return rc;
}

Json run_config_json(const RunConfig& rc) {
    const SuiteConfig& c = rc.suite;
    Json j;
    j["seed"] = c.seed;
    j["trials"] = c.trials;
    if (c.tol) j["tol"] = *c.tol;
    if (!c.tolerances.empty()) {
        Json t = Json::object();
        for (const auto& [key, value] : c.tolerances) t[key] = value;
        j["tolerances"] = t;
    }
    if (!c.only.empty()) j["only"] = c.only;
    j["threads"] = c.threads;
    j["k"] = c.samples;
    if (rc.out) j["out"] = *rc.out;
    return j;
}

std::string format_double(double x, FloatStyle style) {
    if (!std::isfinite(x)) return "null";
    if (x == 0.0) return "0";
    char buf[64];
    const auto res = style == FloatStyle::Fixed17 ? std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17)
                                                  : std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string write_json(const Json& j, FloatStyle style) {
    std::string out;
    write_value(out, j, style, 0);
    out += '\n';
    return out;
}

Json report_json(const CheckReport& r) {
    Json j;
    j["name"] = r.name;
    j["status"] = status_name(r.status);
    j["passed"] = r.passed();
    Json res = Json::array();
    for (const Residual& x : r.residuals) {
        Json e;
        e["label"] = x.label;
        e["value"] = x.value;
        e["tolerance"] = x.tolerance;
        res.push_back(e);
    }
    j["residuals"] = res;
    Json meas = Json::array();
    for (const auto& [label, value] : r.measurements) {
        Json e;
        e["label"] = label;
        e["value"] = value;
        meas.push_back(e);
    }
    j["measurements"] = meas;
    Json wit = Json::array();
    for (const Witness& w : r.witnesses) {
        std::visit(Overloaded{
                       [&](const SphericalPoint& p) { wit.push_back(Json{{"sphere", point_json(p.vec())}}); },
                       [&](const PlanarPoint& p) { wit.push_back(Json{{"plane", Json::array({p.u, p.v})}}); },
                   },
                   w);
    }
    j["witnesses"] = wit;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["note"] = r.note;
    return j;
}

std::string emit_reports(const std::vector<CheckReport>& reports) {
    Json a = Json::array();
    for (const CheckReport& r : reports) a.push_back(report_json(r));
    return write_json(a);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::InvalidArgument, "cannot open " + path + " for writing");
    f << content;
    if (!f) fail(ErrorCode::InvalidArgument, "failed writing " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::InvalidArgument, "cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void emit_report(const std::vector<CheckReport>& reports, const std::string& path) {
    write_file(path, emit_reports(reports));
}

std::string render_svg(const PlanarConvexBody& primal, const PlanarConvexBody& dual) {
    double extent = 0.0;
    for (const auto* b : {&primal, &dual}) {
        for (const Vec2& p : b->vertices()) extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
    }
    const double half = 240.0;
    const double scale = 0.9 * half / extent;
    const std::string h = format_double(half, FloatStyle::Shortest);
    const std::string size = format_double(2 * half, FloatStyle::Shortest);
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"-" + h + " -" + h + " " + size + " " + size + "\">\n";
    s += "  <rect x=\"-" + h + "\" y=\"-" + h + "\" width=\"" + size + "\" height=\"" + size + "\" fill=\"white\"/>\n";
    s += "  <polygon id=\"primal\" points=\"" + svg_points(primal, scale) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    s += "  <polygon id=\"dual\" points=\"" + svg_points(dual, scale) +
         "\" fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
    s += "  <circle id=\"origin\" cx=\"0\" cy=\"0\" r=\"3\" fill=\"black\"/>\n";
    s += "</svg>\n";
    return s;
}

std::string render_csv(const PlanarConvexBody& primal, const PlanarConvexBody& dual) {
    std::string s = "curve,u,v\n";
    auto rows = [&](const char* name, const PlanarConvexBody& b) {
        for (std::size_t i = 0; i <= b.size(); ++i) {
            const Vec2& p = b.vertex(i);
            s += std::string(name) + ',' + format_double(p.x) + ',' + format_double(p.y) + '\n';
        }
    };
    rows("primal", primal);
    rows("dual", dual);
    return s;
}

}  // namespace wulff
