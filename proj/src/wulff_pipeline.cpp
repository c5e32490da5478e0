#include "wulff/wulff_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wulff/numeric.hpp"
#include "wulff/planar.hpp"
#include "wulff/reuleaux.hpp"
#include "wulff/width_metrics.hpp"

namespace wulff {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kConvexTurn = 1e-13;

bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

std::function<double(double)> make_sampled(const SampledGamma& s) {
    const std::size_t n = s.theta.size();
    if (n < 8) fail(ErrorCode::InvalidArgument, "sampled support function needs at least 8 samples");
    if (s.gamma.size() != n) fail(ErrorCode::InvalidArgument, "theta and gamma sample counts differ");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(s.theta[i]) || s.theta[i] < 0.0 || s.theta[i] >= kTwoPi) {
            fail(ErrorCode::InvalidArgument, "sample angles must lie in [0, 2pi)");
        }
        if (i > 0 && !(s.theta[i] > s.theta[i - 1])) {
            fail(ErrorCode::InvalidArgument, "sample angles must be strictly increasing");
        }
        if (!(s.gamma[i] > 0.0) || !std::isfinite(s.gamma[i])) {
            fail(ErrorCode::InvariantViolation, "support function must be positive");
        }
    }
    std::vector<double> steps;
    for (std::size_t i = 0; i + 1 < n; ++i) steps.push_back(std::abs(s.gamma[i + 1] - s.gamma[i]));
    std::nth_element(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(steps.size() / 2), steps.end());
    const double median = steps[steps.size() / 2];
    if (std::abs(s.gamma.back() - s.gamma.front()) > 10.0 * median + 1e-12) {
        fail(ErrorCode::InvariantViolation, "sampled support function jumps across the wraparound");
    }
    auto theta = s.theta;
    auto gamma = s.gamma;
    return [theta = std::move(theta), gamma = std::move(gamma)](double t) {
        t = wrap_angle(t);
        const std::size_t n = theta.size();
        auto it = std::upper_bound(theta.begin(), theta.end(), t);
        std::size_t j = static_cast<std::size_t>(it - theta.begin());
        // Segment from sample i to sample i+1 (cyclic), with unwrapped angles.
        const std::size_t i = j == 0 ? n - 1 : j - 1;
        const std::size_t k = (i + 1) % n;
        double t0 = theta[i];
        double t1 = theta[k];
        if (k == 0) t1 += kTwoPi;
        if (j == 0) t0 -= kTwoPi;
        const double w = (t - t0) / (t1 - t0);
        return gamma[i] * (1.0 - w) + gamma[k] * w;
    };
}

std::function<double(double)> make_reuleaux(const ReuleauxLift& r) {
    auto radial = reuleaux_radial(r.epsilon);
    constexpr std::size_t kMesh = 8192;
    auto pts = std::make_shared<std::vector<Vec2>>(kMesh);
    const double h = kTwoPi / static_cast<double>(kMesh);
    for (std::size_t i = 0; i < kMesh; ++i) {
        const double phi = h * static_cast<double>(i);
        const double rho = std::tan(radial(phi));
        (*pts)[i] = {rho * std::cos(phi), rho * std::sin(phi)};
    }
    return [pts, radial, h](double t) {
        const Vec2 u{std::cos(t), std::sin(t)};
        std::size_t best = 0;
        for (std::size_t i = 1; i < pts->size(); ++i) {
            if (dot((*pts)[i], u) > dot((*pts)[best], u)) best = i;
        }
        const double phi0 = h * static_cast<double>(best);
        auto f = [&](double phi) {
            const double rho = std::tan(radial(wrap_angle(phi)));
            return rho * (std::cos(phi) * u.x + std::sin(phi) * u.y);
        };
        return std::max(dot((*pts)[best], u), golden_max(f, phi0 - h, phi0 + h).value);
    };
}

}  // namespace

// ---------------------------------------------------------------------------

SupportFunction::SupportFunction(Spec spec) : spec_(std::move(spec)) {
    eval_ = std::visit(
        Overloaded{
            [](const ConstantGamma& g) -> std::function<double(double)> {
                if (!(g.c > 0.0) || !std::isfinite(g.c)) fail(ErrorCode::InvariantViolation, "c must be positive");
                return [c = g.c](double) { return c; };
            },
            [](const EllipseGamma& g) -> std::function<double(double)> {
                if (!(g.a > 0.0) || !std::isfinite(g.a)) fail(ErrorCode::InvariantViolation, "a must be positive");
                if (!(g.b > 0.0) || !std::isfinite(g.b)) fail(ErrorCode::InvariantViolation, "b must be positive");
                return [a = g.a, b = g.b](double t) { return std::hypot(a * std::cos(t), b * std::sin(t)); };
            },
            [](const PolygonGamma& g) -> std::function<double(double)> {
                const PlanarConvexBody body(g.vertices);
                return [v = body.vertices()](double t) {
                    const Vec2 u{std::cos(t), std::sin(t)};
                    double m = -std::numeric_limits<double>::infinity();
                    for (const Vec2& p : v) m = std::max(m, dot(p, u));
                    return m;
                };
            },
            [](const SampledGamma& g) { return make_sampled(g); },
            [](const ReuleauxLift& g) { return make_reuleaux(g); },
        },
        spec_);
}

std::vector<double> SupportFunction::facet_normals() const {
    auto edge_normals = [](const std::vector<Vec2>& v) {
        std::vector<double> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Vec2 e = v[(i + 1) % v.size()] - v[i];
            out.push_back(wrap_angle(std::atan2(-e.x, e.y)));
        }
        return out;
    };
    if (const auto* p = std::get_if<PolygonGamma>(&spec_)) return edge_normals(p->vertices);
    if (const auto* r = std::get_if<ReuleauxLift>(&spec_); r && r->epsilon == 0.0) {
        std::vector<Vec2> tri;
        for (const Vec3& v : reuleaux_geometry(0.0).vertices) tri.push_back(Vec2{v.x, v.y} / v.z);
        return edge_normals(tri);
    }
    return {};
}

HalfPlane::HalfPlane(Vec2 t, double g) : theta(t), gamma(g) {
    if (!finite(t) || std::abs(norm(t) - 1.0) > 1e-12) fail(ErrorCode::InvalidArgument, "halfplane direction must be a unit vector");
    if (!(g > 0.0) || !std::isfinite(g)) fail(ErrorCode::InvariantViolation, "support function must be positive");
}

PlanarConvexBody::PlanarConvexBody(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) fail(ErrorCode::Degenerate, "planar body needs at least 3 vertices");
    for (const Vec2& v : vertices_) {
        if (!finite(v)) fail(ErrorCode::InvalidArgument, "planar vertices must be finite");
    }
    double winding = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = vertex(i);
        const Vec2 b = vertex(i + 1);
        const Vec2 c = vertex(i + 2);
        const double la = norm(b - a);
        const double lb = norm(c - b);
        if (la == 0.0 || lb == 0.0) fail(ErrorCode::Degenerate, "planar body has repeated vertices");
        const double turn = cross(b - a, c - b) / (la * lb);
        if (std::abs(turn) <= kConvexTurn) fail(ErrorCode::Degenerate, "planar body has collinear vertices");
        if (turn < 0.0) fail(ErrorCode::InvariantViolation, "planar body is not convex counterclockwise");
        winding += std::atan2(cross(b - a, c - b), dot(b - a, c - b));
        if (cross(b - a, -a) <= 0.0) fail(ErrorCode::InvariantViolation, "origin must be strictly interior");
    }
    if (std::abs(winding - kTwoPi) > 1e-6) fail(ErrorCode::InvariantViolation, "planar body is not simple");
}

// ---------------------------------------------------------------------------

std::vector<HalfPlane> sample_gamma(const SupportFunction& sf, std::size_t k) {
    if (k < 8) fail(ErrorCode::InvalidArgument, "direction count must be at least 8");
    std::vector<HalfPlane> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(k);
        out.emplace_back(Vec2{std::cos(t), std::sin(t)}, sf(t));
    }
    return out;
}

std::vector<HalfPlane> wulff_halfplanes(const SupportFunction& sf, std::size_t k) {
    auto out = sample_gamma(sf, k);
    for (double t : sf.facet_normals()) out.emplace_back(Vec2{std::cos(t), std::sin(t)}, sf(t));
    return out;
}

PlanarConvexBody wulff_shape(const SupportFunction& sf, std::size_t k) { return wulff_construct(wulff_halfplanes(sf, k)); }

PlanarConvexBody wulff_construct(const std::vector<HalfPlane>& halfplanes) {
    if (halfplanes.size() < 8) fail(ErrorCode::InvalidArgument, "wulff construction needs at least 8 halfplanes");
    std::vector<double> angles;
    angles.reserve(halfplanes.size());
    for (const auto& h : halfplanes) angles.push_back(wrap_angle(std::atan2(h.theta.y, h.theta.x)));
    std::sort(angles.begin(), angles.end());
    double gap = angles.front() + kTwoPi - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i) gap = std::max(gap, angles[i] - angles[i - 1]);
    if (gap >= kPi) fail(ErrorCode::Unbounded, "halfplane directions leave an angular gap of at least pi");

    // x.theta <= gamma  <=>  x.d <= 1 with d = theta / gamma; the active
    // constraints are the hull vertices of the d's, and consecutive hull
    // vertices meet at the polygon's corners.
    std::vector<Vec2> dual;
    dual.reserve(halfplanes.size());
    for (const auto& h : halfplanes) dual.push_back(h.theta / h.gamma);
    const auto idx = convex_hull_indices(dual, 1e-13);
    if (idx.size() < 3) fail(ErrorCode::EmptyInterior, "halfplane intersection has empty interior");
    std::vector<Vec2> verts;
    verts.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const Vec2 a = dual[idx[i]];
        const Vec2 b = dual[idx[(i + 1) % idx.size()]];
        const double d = cross(a, b);
        if (!(d > 0.0)) fail(ErrorCode::EmptyInterior, "origin is not interior to the halfplane intersection");
        verts.push_back(Vec2{b.y - a.y, a.x - b.x} / d);
    }
    return PlanarConvexBody(std::move(verts));
}

SphericalBody spherical_wulff(const PlanarConvexBody& w, std::size_t samples) {
    std::vector<Vec3> lifted;
    lifted.reserve(w.size());
    for (const Vec2& v : w.vertices()) lifted.push_back(central_unproject({v.x, v.y}).vec());
    if (w.size() <= kMaxLiftedPolygon) return SphericalPolygon(std::move(lifted));
    return SampledSphericalBody::from_boundary(kNorthPole, lifted, samples);
}

PlanarConvexBody dual_wulff(const PlanarConvexBody& w) {
    std::vector<Vec2> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Vec2 a = w.vertex(i);
        const Vec2 b = w.vertex(i + 1);
        const Vec2 e = b - a;
        const Vec2 n = Vec2{e.y, -e.x} / norm(e);
        const double h = dot(n, a);
        if (!(h > 1e-12)) fail(ErrorCode::Degenerate, "wulff shape has near-empty interior");
        out.push_back(-n / h);
    }
    return PlanarConvexBody(std::move(out));
}

PlanarConvexBody dual_via_pipeline(const SupportFunction& sf, std::size_t k) {
    const auto halfplanes = wulff_halfplanes(sf, k);
    std::vector<Vec3> blown;
    blown.reserve(halfplanes.size());
    for (const auto& h : halfplanes) {
        const Vec2 g = h.theta * h.gamma;  // graph point in polar-plot form
        const SphericalPoint p = central_unproject({g.x, g.y});
        blown.push_back(blow_up(kNorthPole, p).vec());
    }
    const SphericalPolygon hull = s_conv_hull(std::span<const Vec3>(blown));
    const SphericalPolygon polar = polar_polygon(hull);
    std::vector<Vec2> verts;
    verts.reserve(polar.size());
    for (const Vec3& v : polar.vertices()) verts.push_back(central_project(SphericalPoint(v)).vec());
    return PlanarConvexBody(std::move(verts));
}

// ---------------------------------------------------------------------------

std::vector<SphericalPoint> boundary_support_intersection(const SphericalBody& body, const SphericalPoint& m) {
    if (contains(body, m, 0.0) != Containment::Interior) {
        fail(ErrorCode::NotInterior, "reference point must be interior to the body");
    }
    const Vec3 mv = m.vec();
    std::vector<SphericalPoint> out;
    if (const auto* poly = std::get_if<SphericalPolygon>(&body)) {
        const std::size_t n = poly->size();
        const auto& poles = poly->edge_poles();
        for (std::size_t i = 0; i < n; ++i) {
            // Vertex: the blown-up point must fall in the fan of supporting centers.
            const Vec3& v = poly->vertex(i);
            const Vec3 q = blow_up(mv, v);
            const Vec3& a = poles[(i + n - 1) % n];
            const Vec3& b = poles[i];
            if (distance(a, q) + distance(q, b) <= distance(a, b) + 1e-9) out.emplace_back(v);
            // Edge interior: the foot of the perpendicular from m.
            const Vec3 foot = blow_up(mv, b);
            const Vec3& p0 = poly->vertex(i);
            const Vec3& p1 = poly->vertex(i + 1);
            if (distance(foot, p0) > 1e-9 && distance(foot, p1) > 1e-9 && arc_distance(foot, p0, p1) <= 1e-12) {
                out.emplace_back(foot);
            }
        }
        return out;
    }

    // Sampled boundary: H(blow_up(m, P)) supports at P exactly where the
    // distance from m along the boundary is stationary.
    const auto& s = std::get<SampledSphericalBody>(body);
    const std::size_t n = s.size();
    std::vector<double> d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = distance(mv, s.sample(k));
    const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    if (*hi - *lo <= 1e-12) {
        for (const Vec3& p : s.boundary()) out.emplace_back(p);
        return out;
    }
    const double h = s.step();
    auto dist = [&](double phi) { return distance(mv, s.boundary_at(phi)); };
    for (std::size_t k = 0; k < n; ++k) {
        const double prev = d[(k + n - 1) % n];
        const double next = d[(k + 1) % n];
        const double phi = h * static_cast<double>(k);
        if (d[k] > prev && d[k] >= next) {
            out.emplace_back(s.boundary_at(golden_max(dist, phi - h, phi + h).arg));
        } else if (d[k] < prev && d[k] <= next) {
            out.emplace_back(s.boundary_at(golden_min(dist, phi - h, phi + h).arg));
        }
    }
    return out;
}

WulffPair is_self_dual(const PlanarConvexBody& w, double tol) {
    PlanarConvexBody dual = dual_wulff(w);
    const double h = hausdorff_planar(w, dual);
    return WulffPair{w, std::move(dual), h, h <= tol};
}

}  // namespace wulff
