#include "wulff/reuleaux.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "wulff/numeric.hpp"

namespace wulff {

namespace {

// Far intersection of the ray cos t N + sin t u with the circle of radius r
// about v, for N inside that circle.
double circle_exit(const Vec3& u, const Vec3& v, double r) {
    const double a = v.z;
    const double b = dot(u, v);
    const double s = std::hypot(a, b);
    return std::atan2(b, a) + std::acos(std::clamp(std::cos(r) / s, -1.0, 1.0));
}

struct Sectors {
    ReuleauxGeometry g;
    // Azimuth interval [lo, lo + len] of each corner arc.
    std::array<double, 3> corner_lo{};
    std::array<double, 3> corner_len{};
};

}  // namespace

ReuleauxGeometry reuleaux_geometry(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon < kPi / 8)) fail(ErrorCode::InvalidArgument, "corner radius out of range");
    const double w0 = kHalfPi - 2.0 * epsilon;
    // Equilateral vertices at polar angle rho0: cos w0 = 1 - 1.5 sin^2 rho0.
    const double rho0 = std::asin(std::sqrt((1.0 - std::cos(w0)) / 1.5));
    ReuleauxGeometry g;
    g.epsilon = epsilon;
    g.side_radius = w0 + epsilon;
    const Frame f(kNorthPole);
    for (int i = 0; i < 3; ++i) g.vertices[i] = f.point(kHalfPi + i * kTwoPi / 3.0, rho0);
    return g;
}

SampledSphericalBody::RadialFn reuleaux_radial(double epsilon) {
    auto s = std::make_shared<Sectors>();
    s->g = reuleaux_geometry(epsilon);
    const auto& v = s->g.vertices;
    const Frame f(kNorthPole);
    for (int k = 0; k < 3; ++k) {
        // Corner k meets the side arcs about the other two vertices at the
        // points beyond v_k on the great circles from those vertices.
        double az[2];
        int n = 0;
        for (int j = 0; j < 3; ++j) {
            if (j == k) continue;
            const Vec3 dir = normalized(v[k] * dot(v[k], v[j]) - v[j]);
            const Vec3 t = v[k] * std::cos(epsilon) + dir * std::sin(epsilon);
            az[n++] = f.azimuth(t);
        }
        double lo = az[0];
        double len = wrap_angle(az[1] - az[0]);
        if (len > kPi) {
            lo = az[1];
            len = kTwoPi - len;
        }
        s->corner_lo[k] = lo;
        s->corner_len[k] = len;
    }
    return [s](double phi) {
        const Vec3 u{std::cos(phi), std::sin(phi), 0.0};
        const auto& g = s->g;
        for (int k = 0; k < 3; ++k) {
            if (s->corner_len[k] > 0.0 && wrap_angle(phi - s->corner_lo[k]) <= s->corner_len[k]) {
                return circle_exit(u, g.vertices[k], g.epsilon);
            }
        }
        // outside the corners the ray meets the side about the vertex farthest from u
        int far = 0;
        for (int j = 1; j < 3; ++j)
            if (dot(u, g.vertices[j]) < dot(u, g.vertices[far])) far = j;
        return circle_exit(u, g.vertices[far], g.side_radius);
    };
}

}  // namespace wulff
