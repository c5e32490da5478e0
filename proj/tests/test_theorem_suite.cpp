#include <cmath>
#include <string>

#include "doctest.h"
#include "wulff/io.hpp"
#include "wulff/presets.hpp"
#include "wulff/theorem_suite.hpp"

using namespace wulff;

namespace {

const double kMeshTol = 10 * std::pow(kTwoPi / 2048, 2);

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

SphericalBody body(const char* name) { return find_preset(name)->body(kDefaultSamples); }

}  // namespace

TEST_CASE("seeds and families") {
    CHECK(check_seed(0, "width_duality/disk") == check_seed(0, "width_duality/disk"));
    CHECK(check_seed(0, "width_duality/disk") != check_seed(1, "width_duality/disk"));
    CHECK(check_seed(0, "width_duality/disk") != check_seed(0, "width_duality/square"));
    CHECK(check_family("width_duality/cap_pi/8") == "width_duality");
    CHECK(check_family("constant_width_polytope") == "constant_width_polytope");
}

TEST_CASE("constant width polygons") {
    const CheckReport r = check_constant_width_polytope(60, 3, kExactTol);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.trials == 60);
    CHECK(r.seed == 3);
    REQUIRE(r.residuals.size() == 3);
    CHECK(r.residuals[0].value == 0.0);
    CHECK(r.residuals[1].value <= 1e-12);  // octant and its rotations
}

TEST_CASE("self-duality equivalences") {
    const CheckReport disk = check_selfdual_equivalences(wulff_shape(SupportFunction(ConstantGamma{1}), 2048), kMeshTol);
    CHECK(disk.status == CheckStatus::Pass);
    CHECK(has(disk.note, "self_dual=true constant_width_half_pi=true constant_diameter_half_pi=true"));

    const CheckReport tri = check_selfdual_equivalences(PlanarConvexBody(triangle_sqrt2_vertices()), kExactTol);
    CHECK(tri.status == CheckStatus::Pass);
    CHECK(has(tri.note, "self_dual=true"));

    for (const PlanarConvexBody& w : {wulff_shape(SupportFunction(EllipseGamma{2, 1}), 2048),
                                      PlanarConvexBody(square_vertices())}) {
        const CheckReport r = check_selfdual_equivalences(w, kMeshTol);
        CHECK(r.status == CheckStatus::Pass);
        CHECK(has(r.note, "self_dual=false constant_width_half_pi=false constant_diameter_half_pi=false"));
    }
}

TEST_CASE("width duality") {
    CHECK(check_width_duality(spherical_cap(kPi / 8), kExactTol).status == CheckStatus::Pass);
    CHECK(check_width_duality(octant_polygon(), kExactTol).status == CheckStatus::Pass);
    CHECK(check_width_duality(ellipse_lift(2, 1), kExactTol).status == CheckStatus::NotApplicable);
}

TEST_CASE("strict convexity") {
    CHECK(check_strict_convexity(spherical_cap(kPi / 8), kExactTol).status == CheckStatus::Pass);
    CHECK(check_strict_convexity(spherical_cap(kPi / 4), kExactTol).status == CheckStatus::NotApplicable);
    CHECK(check_strict_convexity(octant_polygon(), kExactTol).status == CheckStatus::NotApplicable);
    const CheckReport e = check_strict_convexity_ensemble(100, 4, kExactTol);
    CHECK(e.status == CheckStatus::Pass);
    CHECK(e.trials == 100);
}

TEST_CASE("arcs through the interior") {
    CHECK(check_arc_interior(spherical_cap(kPi / 4), 200, kExactTol).status == CheckStatus::Pass);
    CHECK(check_arc_interior(ellipse_lift(2, 1), 200, kExactTol).status == CheckStatus::Pass);
    CHECK(check_arc_interior(body("square"), 200, kExactTol).status == CheckStatus::NotApplicable);
}

TEST_CASE("blow-up boundary property") {
    const CheckReport cap = check_blowup_property(spherical_cap(kPi / 4), 30, kExactTol, 9);
    CHECK(cap.status == CheckStatus::Pass);
    CHECK(cap.trials == 30);

    const CheckReport el = check_blowup_property(ellipse_lift(2, 1), 30, kExactTol, 9);
    CHECK(el.status == CheckStatus::Fail);
    CHECK_FALSE(el.witnesses.empty());

    // smaller and larger caps are not self-dual either
    CHECK(check_blowup_property(spherical_cap(kPi / 8), 10, kExactTol, 9).status == CheckStatus::Fail);

    const CheckReport sm = check_blowup_property(body("reuleaux_smoothed"), 20, kSmoothedTol, 9);
    CHECK(sm.status == CheckStatus::Pass);
    CHECK(check_blowup_property(body("square"), 10, kExactTol, 9).status == CheckStatus::NotApplicable);
}

TEST_CASE("thickness and polar diameter") {
    CHECK(check_thickness_diameter_duality(body("ellipse21"), 1e-8).status == CheckStatus::Pass);
    CHECK(check_thickness_diameter_ensemble(10, 5, 1e-8).status == CheckStatus::Pass);
}

TEST_CASE("suite selection and tolerances") {
    SuiteConfig c;
    c.only = {"width_duality"};
    const auto reports = run_all(c);
    REQUIRE(reports.size() == 11);
    const auto names = preset_suite();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].name == "width_duality/" + names[i]);
        CHECK(reports[i].passed());
        CHECK(reports[i].seed == check_seed(0, reports[i].name));
    }

    // full name beats family beats global
    c.only = {"width_duality/cap_pi/8", "width_duality/octant"};
    c.tol = 0.5;
    c.tolerances = {{"width_duality", 0.25}, {"width_duality/octant", 0.125}};
    const auto tuned = run_all(c);
    REQUIRE(tuned.size() == 2);
    CHECK(tuned[0].residuals.front().tolerance == 0.25);
    CHECK(tuned[1].residuals.front().tolerance == 0.125);

    // zero tolerance is allowed; failures are flagged as artifacts
    c.only = {"width_duality/cap_3pi/8", "width_duality/octant"};
    c.tolerances.clear();
    c.tol = 0.0;
    bool any_fail = false;
    for (const CheckReport& r : run_all(c)) {
        if (r.status == CheckStatus::Fail) {
            any_fail = true;
            CHECK(has(r.note, "zero tolerance"));
        }
    }
    CHECK(any_fail);

    c.tol = -1e-6;
    CHECK_THROWS_AS(run_all(c), GeometryError);
    c.tol.reset();
    c.tolerances = {{"arc_interior", -1.0}};
    CHECK_THROWS_AS(run_all(c), GeometryError);
}

TEST_CASE("suite is deterministic across thread counts") {
    SuiteConfig c;
    c.trials = 40;
    c.seed = 77;
    c.only = {"constant_width_polytope", "strict_convexity/random_polygons", "thickness_diameter_duality/random_polygons",
              "blowup_property/cap_pi/4"};
    c.interior_samples = 10;
    c.duality_polygons = 10;
    const std::string a = emit_reports(run_all(c));
    c.threads = 3;
    const std::string b = emit_reports(run_all(c));
    CHECK(a == b);
    c.seed = 78;
    CHECK(emit_reports(run_all(c)) != a);
}

TEST_CASE("checks on one body") {
    SuiteConfig c;
    c.arc_samples = 100;
    c.interior_samples = 10;
    const PlanarConvexBody w = wulff_shape(SupportFunction(EllipseGamma{3, 1}), 2048);
    const BodyUnderTest b = wulff_under_test("ellipse31", w);
    CHECK(b.tol == doctest::Approx(kMeshTol));
    const auto reports = run_body_checks(b, c);
    REQUIRE(reports.size() == 7);
    CHECK(reports.front().name == "selfdual_equivalences/ellipse31");
    for (const CheckReport& r : reports) CHECK_MESSAGE(r.passed(), r.name);

    const BodyUnderTest oct = preset_under_test(*find_preset("octant"));
    REQUIRE(oct.wulff);
    CHECK(oct.wulff->size() == 3);
}
