#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wulff/presets.hpp"
#include "wulff/width_metrics.hpp"

using namespace wulff;

namespace {

const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};

SphericalBody octant() { return octant_polygon(); }

std::vector<Vec3> dense_polygon(const SphericalPolygon& p, int per_edge) {
    return oracle::polygon_boundary(p.vertices(), per_edge);
}

}  // namespace

TEST_CASE("width with respect to a hemisphere") {
    CHECK(width_wrt(octant(), Hemisphere{SphericalPoint(e1)}) == doctest::Approx(kHalfPi).epsilon(1e-14));
    const SphericalBody cap = spherical_cap(kPi / 4);
    const auto pol = polar(cap);
    for (double phi : {0.0, 0.9, 4.0}) {
        const Vec3 c = std::get<SampledSphericalBody>(pol).boundary_at(phi);
        CHECK(width_wrt(cap, pol, Hemisphere{SphericalPoint(c)}) == doctest::Approx(kHalfPi).epsilon(1e-12));
    }
    try {
        width_wrt(cap, Hemisphere{kNorthPole});
        CHECK(false);
    } catch (const GeometryError& e) {
        CHECK(e.code() == ErrorCode::NotSupporting);
    }

    // ellipse lift at the lift of (2, 0): the supporting center projects to
    // (-1/2, 0); the polar is the lift of the ellipse with semi-axes 1/2, 1.
    const SphericalBody el = ellipse_lift(2, 1);
    const Vec3 c = normalized(Vec3{-1, 0, 2});
    double far = 0;
    for (int i = 0; i < 100000; ++i) {
        const double t = kTwoPi * i / 100000.0;
        const Vec3 q = normalized(Vec3{0.5 * std::cos(t), std::sin(t), 1});
        far = std::max(far, oracle::sphere_dist(c, q));
    }
    CHECK(std::abs(width_wrt(el, Hemisphere{SphericalPoint(c)}) - (kPi - far)) <= 1e-6);
}

TEST_CASE("thickness") {
    CHECK(thickness(octant()) == doctest::Approx(kHalfPi).epsilon(1e-12));
    CHECK(thickness(spherical_cap(kPi / 8)) == doctest::Approx(kPi / 4).epsilon(1e-12));
    const SphericalBody sq = find_preset("square")->body(kDefaultSamples);
    CHECK(std::abs(thickness(sq) - (kPi - diameter(polar(sq)).diameter)) <= 1e-9);
}

TEST_CASE("diameter") {
    const auto o = diameter(octant());
    CHECK(o.diameter == doctest::Approx(kHalfPi).epsilon(1e-14));
    CHECK(distance(o.witness_p, o.witness_q) == o.diameter);
    const auto c = diameter(spherical_cap(kPi / 8));
    CHECK(c.diameter == doctest::Approx(kPi / 4).epsilon(1e-12));
    CHECK(diameter(reuleaux_body(0.0)).diameter == doctest::Approx(kHalfPi).epsilon(1e-12));

    Rng rng(53);
    for (int t = 0; t < 20; ++t) {
        const auto p = random_spherical_polygon(rng);
        const auto d = diameter(p);
        const double dense = oracle::max_pairwise(dense_polygon(p, 200 / static_cast<int>(p.size())));
        CHECK(dense <= d.diameter + 1e-12);
        CHECK(d.diameter - dense <= 1e-4);
        CHECK(std::abs(distance(d.witness_p, d.witness_q) - d.diameter) <= 1e-10);
    }
    // the lifted ellipse: all pairs on a dense mesh
    const auto el = ellipse_lift(2, 1);
    std::vector<Vec3> pts;
    for (int i = 0; i < 3000; ++i) pts.push_back(el.boundary_at(kTwoPi * i / 3000.0));
    const double dense = oracle::max_pairwise(pts);
    const double d = diameter(el).diameter;
    CHECK(dense <= d + 1e-12);
    CHECK(d - dense <= 1e-6);
    // known value: the major axis ends are 2 atan 2 apart
    CHECK(d == doctest::Approx(2 * std::atan(2.0)).epsilon(1e-10));
}

TEST_CASE("constant width") {
    const auto c = is_constant_width(spherical_cap(kPi / 4), 1e-6);
    CHECK(c.constant);
    CHECK(c.delta == doctest::Approx(kHalfPi).epsilon(1e-12));
    const auto o = is_constant_width(octant(), 1e-6);
    CHECK(o.constant);
    CHECK(o.delta == doctest::Approx(kHalfPi).epsilon(1e-12));
    const auto e = is_constant_width(ellipse_lift(2, 1), 1e-6);
    CHECK_FALSE(e.constant);
    CHECK(e.max_width - e.min_width > 0.1);
    CHECK(e.min_width <= e.max_width);
}

TEST_CASE("constant diameter") {
    CHECK(is_constant_diameter(reuleaux_body(0.0), 1e-6).constant);
    const auto c = is_constant_diameter(spherical_cap(kPi / 4), 1e-6);
    CHECK(c.constant);
    CHECK(c.diameter == doctest::Approx(kHalfPi).epsilon(1e-12));
    const SphericalBody sq = find_preset("square")->body(kDefaultSamples);
    CHECK_FALSE(is_constant_diameter(sq, 1e-6).constant);
}

TEST_CASE("planar hausdorff") {
    std::vector<Vec2> d1, d2;
    for (int i = 0; i < 64; ++i) {
        const double t = kTwoPi * i / 64;
        d1.push_back({std::cos(t), std::sin(t)});
        d2.push_back({2 * std::cos(t), 2 * std::sin(t)});
    }
    CHECK(hausdorff_planar(PlanarConvexBody(d1), PlanarConvexBody(d1)) == 0.0);
    CHECK(hausdorff_planar(PlanarConvexBody(d1), PlanarConvexBody(d2)) == doctest::Approx(1.0).epsilon(1e-14));
    const PlanarConvexBody sq(square_vertices());
    const PlanarConvexBody diamond({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(hausdorff_planar(sq, diamond) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("spherical hausdorff") {
    const SphericalBody a = spherical_cap(kPi / 8);
    const SphericalBody b = spherical_cap(kPi / 4);
    CHECK(hausdorff_spherical(a, a) == 0.0);
    CHECK(hausdorff_spherical(a, b) == doctest::Approx(kPi / 8).epsilon(1e-12));

    const SphericalPoint c(1, 1, 1);
    const SphericalBody cap = spherical_cap(kPi / 4, c);
    const double h = hausdorff_spherical(octant(), cap);
    // dense oracle over both boundaries
    const auto ob = oracle::polygon_boundary({e1, e2, e3}, 20000);
    const auto cb = oracle::cap_boundary(c.vec(), kPi / 4, 60000);
    double oracle_h = 0;
    for (const Vec3& p : ob) oracle_h = std::max(oracle_h, oracle::sphere_dist(p, c.vec()) - kPi / 4);
    for (const Vec3& p : cb) oracle_h = std::max(oracle_h, signed_boundary_distance(octant(), p));
    CHECK(std::abs(h - oracle_h) <= 1e-6);
    CHECK(h == doctest::Approx(std::acos(1 / std::sqrt(3.0)) - kPi / 4).epsilon(1e-10));
}

TEST_CASE("diameter support check") {
    CHECK(diameter_support_check(octant()).passed());
    CHECK(diameter_support_check(spherical_cap(kPi / 8)).passed());
    CHECK(diameter_support_check(reuleaux_body(0.0)).passed());
}

TEST_CASE("thickness and polar diameter add to pi") {
    for (const auto& name : preset_suite()) {
        const SphericalBody b = find_preset(name)->body(kDefaultSamples);
        CHECK_MESSAGE(std::abs(thickness(b) + diameter(polar(b)).diameter - kPi) <= 1e-8, name);
    }
    Rng rng(59);
    for (int t = 0; t < 20; ++t) {
        const SphericalBody p = random_spherical_polygon(rng);
        CHECK(std::abs(thickness(p) + diameter(polar(p)).diameter - kPi) <= 1e-8);
    }
}

TEST_CASE("cap widths and their polars") {
    for (double r : {kPi / 16, kPi / 8, kPi / 4, 3 * kPi / 8}) {
        const SphericalBody cap = spherical_cap(r);
        const auto w = is_constant_width(cap, 1e-9);
        CHECK(w.constant);
        CHECK(std::abs(w.delta - 2 * r) <= 1e-9);
        const auto wp = is_constant_width(polar(cap), 1e-9);
        CHECK(wp.constant);
        CHECK(std::abs(wp.delta - (kPi - 2 * r)) <= 1e-9);
    }
}

TEST_CASE("monotone diameter and widths above thickness") {
    Rng rng(61);
    for (int t = 0; t < 20; ++t) {
        const auto p = random_spherical_polygon(rng);
        std::vector<Vec3> pts = p.vertices();
        pts.push_back(Frame(p.interior_point()).point(1.0, 1.2));
        const auto grown = s_conv_hull(std::span<const Vec3>(pts));
        CHECK(diameter(p).diameter <= diameter(grown).diameter + 1e-10);
        const SphericalBody body = p;
        const double th = thickness(body);
        const auto pol = polar(body);
        for (const Vec3& c : std::get<SphericalPolygon>(pol).vertices()) {
            const double w = width_wrt(body, pol, Hemisphere{SphericalPoint(c)});
            CHECK(w >= th - 1e-12);
            CHECK(w > 0);
            CHECK(w < kPi);
        }
    }
}
