#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "wulff/commands.hpp"
#include "wulff/io.hpp"
#include "wulff/presets.hpp"

using namespace wulff;

namespace {

std::string strip(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
}

// code and message of the error a call throws
std::pair<ErrorCode, std::string> error_of(auto&& f) {
    try {
        f();
    } catch (const GeometryError& e) {
        return {e.code(), e.what()};
    }
    return {ErrorCode::InvalidArgument, "<no error>"};
}

std::size_t count(const std::string& s, const std::string& part) {
    std::size_t n = 0;
    for (auto p = s.find(part); p != std::string::npos; p = s.find(part, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("shape specs") {
    const ShapeSpec c = parse_shape_spec(R"({"kind":"constant","c":1.0})");
    REQUIRE(std::holds_alternative<ConstantGamma>(c.shape));
    CHECK(std::get<ConstantGamma>(c.shape).c == 1.0);
    CHECK(c.directions() == 2048);

    const ShapeSpec e = parse_shape_spec(R"({"kind":"ellipse","a":2,"b":1,"k":512})");
    CHECK(std::get<EllipseGamma>(e.shape).a == 2.0);
    CHECK(std::get<EllipseGamma>(e.shape).b == 1.0);
    CHECK(e.directions() == 512);

    const auto neg = error_of([] { parse_shape_spec(R"({"kind":"constant","c":-1})"); });
    CHECK(neg.first == ErrorCode::InvariantViolation);
    CHECK(neg.second.starts_with("c:"));

    CHECK(error_of([] { parse_shape_spec(R"({"kind":"ellipse","a":2,"b":1,"c":3})"); }).second == "c: unknown key");
    CHECK(error_of([] { parse_shape_spec(R"({"kind":"ellipse","a":2})"); }).second == "b: missing");
    CHECK(error_of([] { parse_shape_spec(R"({"kind":"torus"})"); }).second.starts_with("kind:"));
    CHECK(error_of([] { parse_shape_spec(R"({"kind":"preset","name":"hexagon"})"); }).second.starts_with("name:"));
    CHECK(error_of([] { parse_shape_spec(R"({"kind":"constant","c":1,"k":4})"); }).second.starts_with("k:"));
    CHECK(error_of([] { parse_shape_spec(R"({"kind":"constant","c":1,"k":-3})"); }).second.starts_with("k:"));
    CHECK(error_of([] { parse_shape_spec("[1,2]"); }).second.starts_with("<root>:"));

    const auto bad = error_of([] { parse_shape_spec(R"({"kind":"polygon_gamma","vertices":[[1,0],["x",1],[0,1]]})"); });
    CHECK(bad.second.starts_with("vertices[1][0]:"));
    // origin outside the polygon: the field is named
    const auto out = error_of([] { parse_shape_spec(R"({"kind":"polygon_gamma","vertices":[[1,1],[2,1],[1,2]]})"); });
    CHECK(out.first == ErrorCode::InvariantViolation);
    CHECK(out.second.starts_with("vertices:"));

    const auto mal = error_of([] { parse_shape_spec(R"({"kind":"constant",)"); });
    CHECK(mal.first == ErrorCode::ParseError);
    CHECK(mal.second.find("at byte 20") != std::string::npos);
}

TEST_CASE("shape spec round trip") {
    for (const char* text : {
             R"({"kind":"constant","c":1})",
             R"({"kind":"ellipse","a":2,"b":0.1,"k":4096})",
             R"({"kind":"polygon_gamma","vertices":[[1,-1],[1,1],[-1,1],[-1,-1]]})",
             R"({"kind":"preset","name":"cap_3pi/8"})",
         }) {
        const std::string emitted = emit_shape_spec(parse_shape_spec(text));
        CHECK(strip(emitted) == text);
        CHECK(emit_shape_spec(parse_shape_spec(emitted)) == emitted);
    }
    Rng rng(4);
    ShapeSpec s;
    s.shape = random_sampled_gamma(rng, 12);
    const ShapeSpec back = parse_shape_spec(emit_shape_spec(s));
    CHECK(std::get<SampledGamma>(back.shape).theta == std::get<SampledGamma>(s.shape).theta);
    CHECK(std::get<SampledGamma>(back.shape).gamma == std::get<SampledGamma>(s.shape).gamma);
}

TEST_CASE("run configs") {
    const RunConfig rc = parse_run_config(
        R"({"seed":9,"trials":30,"tol":1e-7,"tolerances":{"arc_interior":1e-3},"only":["arc_interior"],"threads":2,"k":1024,"out":"r.json"})");
    CHECK(rc.suite.seed == 9);
    CHECK(rc.suite.trials == 30);
    CHECK(*rc.suite.tol == 1e-7);
    CHECK(rc.suite.tolerances.at("arc_interior") == 1e-3);
    CHECK(rc.suite.only == std::vector<std::string>{"arc_interior"});
    CHECK(rc.suite.threads == 2);
    CHECK(rc.suite.samples == 1024);
    CHECK(*rc.out == "r.json");
    CHECK(parse_run_config(write_json(run_config_json(rc))).suite.tolerances == rc.suite.tolerances);

    CHECK(parse_run_config("{}").suite.seed == 0);
    CHECK(error_of([] { parse_run_config(R"({"seeds":1})"); }).second == "seeds: unknown key");
    CHECK(error_of([] { parse_run_config(R"({"tolerances":{"x":-1}})"); }).second.starts_with("tolerances.x:"));
    CHECK(error_of([] { parse_run_config(R"({"trials":0})"); }).second.starts_with("trials:"));
    CHECK(error_of([] { parse_run_config(R"({"only":[3]})"); }).second.starts_with("only[0]:"));
}

TEST_CASE("number formatting") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(0.1, FloatStyle::Shortest) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(1.0 / 3) == "0.33333333333333331");
    CHECK(format_double(-2.5e-300) == "-2.5e-300");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(NAN) == "null");
    CHECK(std::stod(format_double(kPi)) == kPi);
}

TEST_CASE("report emission") {
    CHECK(emit_reports({}) == "[]\n");

    CheckReport r;
    r.name = "arc_interior/cap_pi/4";
    r.add("arcs_missing_interior", 0.0, 0.0);
    r.measure("shallowest_arc_depth", 0.25);
    r.witnesses.push_back(kNorthPole);
    r.witnesses.push_back(PlanarPoint{0.5, -1});
    r.seed = 3;
    r.trials = 10;
    const Json j = Json::parse(emit_reports({r}));
    REQUIRE(j.size() == 1);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j[0].items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"name", "status", "passed", "residuals", "measurements", "witnesses",
                                           "seed", "trials", "note"});
    CHECK(j[0]["status"] == "pass");
    CHECK(j[0]["passed"] == true);
    CHECK(j[0]["residuals"][0]["label"] == "arcs_missing_interior");
    CHECK(j[0]["witnesses"][0]["sphere"][2] == 1.0);
    CHECK(j[0]["witnesses"][1]["plane"][0] == 0.5);
    CHECK(emit_reports({r}).back() == '\n');

    const auto path = (std::filesystem::temp_directory_path() / "wulff_io_test.json").string();
    emit_report({r}, path);
    CHECK(read_file(path) == emit_reports({r}));
    CHECK_THROWS_AS(emit_report({r}, "/nonexistent/dir/x.json"), GeometryError);
}

TEST_CASE("render") {
    const RenderOutput out = cmd_render(parse_shape_spec(R"({"kind":"preset","name":"square"})"));
    CHECK(out.svg.starts_with("<?xml"));
    CHECK(count(out.svg, "version=\"1.1\"") == 1);
    CHECK(count(out.svg, "id=\"primal\"") == 1);
    CHECK(count(out.svg, "id=\"dual\"") == 1);
    CHECK(count(out.svg, "id=\"origin\"") == 1);
    CHECK(count(out.svg, "stroke-dasharray") == 1);
    CHECK(count(out.svg, "<") == count(out.svg, ">"));
    CHECK(out.csv.starts_with("curve,u,v\n"));
    CHECK(count(out.csv, "\nprimal,") == 5);
    CHECK(count(out.csv, "\ndual,") == 5);
}

TEST_CASE("commands") {
    const Json sq = Json::parse(cmd_dual(parse_shape_spec(R"({"kind":"preset","name":"square"})")));
    CHECK(sq["self_dual"] == false);
    CHECK(sq["hausdorff"].get<double>() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sq["dual"].size() == 4);

    const Json tri = Json::parse(cmd_dual(parse_shape_spec(R"({"kind":"preset","name":"triangle_sqrt2"})")));
    CHECK(tri["self_dual"] == true);

    const Json disk = Json::parse(cmd_dual(parse_shape_spec(R"({"kind":"constant","c":1})")));
    CHECK(disk["self_dual"] == true);
    CHECK(Json::parse(cmd_dual(parse_shape_spec(R"({"kind":"constant","c":1})"), {1e-9}))["self_dual"] == false);

    const Json b = Json::parse(cmd_build(parse_shape_spec(R"({"kind":"ellipse","a":2,"b":1,"k":64})")));
    CHECK(b["vertex_count"] == 64);
    for (const auto& v : b["vertices"]) {
        const double x = v[0], y = v[1];
        CHECK(x * x / 4 + y * y >= 1.0 - 1e-12);  // circumscribed polygon
    }

    const Json m = Json::parse(cmd_metrics(parse_shape_spec(R"({"kind":"preset","name":"cap_pi/4"})")));
    CHECK(m["width"]["constant"] == true);
    CHECK(m["width"]["delta"].get<double>() == doctest::Approx(kHalfPi).epsilon(1e-12));
    CHECK(m["diameter"]["value"].get<double>() == doctest::Approx(kHalfPi).epsilon(1e-12));
    CHECK(m["thickness"].get<double>() == doctest::Approx(kHalfPi).epsilon(1e-12));

    // the octant has no support function but does project to a triangle
    CHECK(Json::parse(cmd_build(parse_shape_spec(R"({"kind":"preset","name":"octant"})")))["vertex_count"] == 3);

    SuiteConfig c;
    c.interior_samples = 10;
    c.arc_samples = 100;
    const CommandOutput ok = cmd_check(parse_shape_spec(R"({"kind":"preset","name":"octant"})"), c);
    CHECK(ok.status == kExitOk);
    CHECK(Json::parse(ok.text).size() == 7);
    c.tol = 0.0;
    c.only = {"width_duality"};
    CHECK(cmd_check(parse_shape_spec(R"({"kind":"preset","name":"cap_3pi/8"})"), c).status == kExitCheckFailed);

    const Json err = Json::parse(error_json("ParseError", "bad"));
    CHECK(err["error"]["code"] == "ParseError");
}
