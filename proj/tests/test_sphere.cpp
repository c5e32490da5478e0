#include <cmath>
#include <random>

#include "doctest.h"
#include "wulff/sphere.hpp"

using namespace wulff;

namespace {

SphericalPoint random_point(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    return SphericalPoint(g(rng), g(rng), g(rng));
}

}  // namespace

TEST_CASE("distance basics") {
    CHECK(distance(kNorthPole, kNorthPole) == doctest::Approx(0.0));
    CHECK(distance(kNorthPole, SphericalPoint(1, 0, 0)) == doctest::Approx(kHalfPi).epsilon(1e-15));
    CHECK(distance(SphericalPoint(1, 0, 0), SphericalPoint(-1, 0, 0)) == doctest::Approx(kPi).epsilon(1e-15));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        const auto p = random_point(rng);
        const auto q = random_point(rng);
        CHECK(distance(p, q) == doctest::Approx(clamped_acos(dot(p, q))).epsilon(1e-7));
        CHECK(distance(p, q) == distance(q, p));
    }
}

TEST_CASE("spherical point normalizes and rejects zero") {
    const SphericalPoint p(3, 0, 4);
    CHECK(p.x() == doctest::Approx(0.6));
    CHECK(p.z() == doctest::Approx(0.8));
    CHECK_THROWS_AS(SphericalPoint(0, 0, 0), GeometryError);
}

TEST_CASE("arc_point") {
    const GreatArc arc(kNorthPole, SphericalPoint(1, 0, 0));
    CHECK(arc_point(arc, 0.0) == kNorthPole);
    const auto mid = arc_point(arc, 0.5);
    CHECK(mid.x() == doctest::Approx(std::sqrt(0.5)));
    CHECK(mid.z() == doctest::Approx(std::sqrt(0.5)));
    CHECK(arc_point(GreatArc(kNorthPole, SphericalPoint(0, 1, 0)), 1.0) == SphericalPoint(0, 1, 0));
    CHECK_THROWS_AS(arc_point(arc, 1.5), GeometryError);
    CHECK_THROWS_AS(GreatArc(kNorthPole, SphericalPoint(0, 0, -1)), GeometryError);
}

TEST_CASE("central projection") {
    const auto a = central_project(kNorthPole);
    CHECK(a.u == 0.0);
    CHECK(a.v == 0.0);
    const auto b = central_project(SphericalPoint(0.6, 0, 0.8));
    CHECK(b.u == doctest::Approx(0.75).epsilon(1e-15));
    const auto c = central_project(SphericalPoint(0, 0.6, 0.8));
    CHECK(c.v == doctest::Approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(central_project(SphericalPoint(1, 0, 0)), GeometryError);

    const auto l = central_unproject({0.75, 0});
    CHECK(l.x() == doctest::Approx(0.6));
    CHECK(l.z() == doctest::Approx(0.8));
    const auto m = central_unproject({1, 0});
    CHECK(m.x() == doctest::Approx(std::sqrt(0.5)));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 1000; ++i) {
        const PlanarPoint x{u(rng), u(rng)};
        const auto y = central_project(central_unproject(x));
        CHECK(std::abs(y.u - x.u) <= 1e-12 * (1 + std::abs(x.u)));
        CHECK(std::abs(y.v - x.v) <= 1e-12 * (1 + std::abs(x.v)));
    }
}

TEST_CASE("blow_up") {
    const auto a = blow_up(kNorthPole, SphericalPoint(1, 0, 0));
    CHECK(distance(a, kNorthPole) <= 1e-15);
    const auto b = blow_up(kNorthPole, SphericalPoint(1, 0, 1));
    CHECK(b.x() == doctest::Approx(-std::sqrt(0.5)));
    CHECK(b.z() == doctest::Approx(std::sqrt(0.5)));
    const auto c = blow_up(kNorthPole, SphericalPoint(0, 1, 1));
    CHECK(c.y() == doctest::Approx(-std::sqrt(0.5)));
    CHECK_THROWS_AS(blow_up(kNorthPole, kNorthPole), GeometryError);
    CHECK_THROWS_AS(blow_up(kNorthPole, SphericalPoint(0, 0, -1)), GeometryError);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20000; ++i) {
        const auto m = random_point(rng);
        auto p = random_point(rng);
        if (std::abs(dot(m, p)) > 1 - 1e-6) continue;
        const auto q = blow_up(m, p);
        CHECK(std::abs(dot(q, p)) <= 1e-12);
        CHECK(dot(q, m) >= -1e-15);
        CHECK(std::abs(det(m.vec(), p.vec(), q.vec())) <= 1e-12);
        if (dot(m, p) > 0) CHECK(distance(blow_up(m, q), p) <= 1e-10);
    }
}

TEST_CASE("lunes and hemispheres") {
    CHECK(lune_thickness(Lune(kNorthPole, SphericalPoint(1, 0, 0))) == doctest::Approx(kHalfPi));
    CHECK(lune_thickness(Lune(kNorthPole, SphericalPoint(0.6, 0, 0.8))) == doctest::Approx(kPi - std::acos(0.8)));
    CHECK_THROWS_AS(Lune(kNorthPole, kNorthPole), GeometryError);
    CHECK_THROWS_AS(Lune(kNorthPole, SphericalPoint(0, 0, -1)), GeometryError);

    const Hemisphere h{kNorthPole};
    CHECK(hemisphere_contains(h, kNorthPole, 0.0));
    CHECK(hemisphere_contains(h, SphericalPoint(1, 0, 0), 0.0));
    CHECK_FALSE(hemisphere_contains(h, SphericalPoint(0, 0, -1), 1e-9));
}

TEST_CASE("arc helpers agree with dense sampling") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_point(rng).vec();
        const auto b = random_point(rng).vec();
        const auto q = random_point(rng).vec();
        if (dot(a, b) < -0.9) continue;
        double dmin = 10, pmin = 10;
        for (int j = 0; j <= 20000; ++j) {
            const double t = j / 20000.0;
            const Vec3 x = normalized(a * (1 - t) + b * t);
            dmin = std::min(dmin, distance(q, x));
            pmin = std::min(pmin, dot(q, x));
        }
        CHECK(arc_distance(q, a, b) == doctest::Approx(dmin).epsilon(1e-6));
        CHECK(arc_min_dot(q, a, b).value == doctest::Approx(pmin).epsilon(1e-6));
        CHECK(arc_min_dot(q, a, b).value <= pmin + 1e-15);
    }
}

TEST_CASE("frame is an isometry taking N to the pole") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_point(rng);
        const Frame f(p);
        CHECK(norm(f.pole() - p.vec()) <= 1e-15);
        CHECK(std::abs(dot(f.e1(), f.e2())) <= 1e-14);
        CHECK(std::abs(dot(f.e1(), f.pole())) <= 1e-14);
        CHECK(det(f.e1(), f.e2(), f.pole()) == doctest::Approx(1.0));
        const double phi = 1.3;
        CHECK(distance(f.point(phi, 0.4), p.vec()) == doctest::Approx(0.4));
        CHECK(f.azimuth(f.point(phi, 0.4)) == doctest::Approx(phi));
    }
    const Frame n(kNorthPole);
    CHECK(norm(n.e1() - Vec3{1, 0, 0}) == 0.0);
}
