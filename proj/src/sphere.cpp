#include "wulff/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wulff/numeric.hpp"

namespace wulff {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::EquatorialPoint: return "EquatorialPoint";
        case ErrorCode::PoleInput: return "PoleInput";
        case ErrorCode::NotHemispherical: return "NotHemispherical";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::NotOnBoundary: return "NotOnBoundary";
        case ErrorCode::NotSupporting: return "NotSupporting";
        case ErrorCode::NotInterior: return "NotInterior";
        case ErrorCode::Unbounded: return "Unbounded";
        case ErrorCode::EmptyInterior: return "EmptyInterior";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

SphericalPoint::SphericalPoint(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(n) || n == 0.0) {
        fail(ErrorCode::InvalidArgument, "spherical point needs a finite non-zero vector");
    }
    v_ = {x / n, y / n, z / n};
}

Lune::Lune(const SphericalPoint& p, const SphericalPoint& q) : p_(p), q_(q) {
    const double d = distance(p, q);
    if (d < kAngularTol || d > kPi - kAngularTol) {
        fail(ErrorCode::InvariantViolation, "lune hemispheres must be different and not opposite");
    }
}

GreatArc::GreatArc(const SphericalPoint& a, const SphericalPoint& b) : a_(a), b_(b) {
    if (dot(a, b) <= -1.0 + 1e-12) {
        fail(ErrorCode::InvariantViolation, "arc endpoints are antipodal");
    }
}

double clamped_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

double distance(const Vec3& p, const Vec3& q) {
    // atan2 form keeps precision for nearly equal or nearly antipodal points;
    // it agrees with the clamped arccos of the dot product.
    return std::atan2(norm(cross(p, q)), dot(p, q));
}

double distance(const SphericalPoint& p, const SphericalPoint& q) { return distance(p.vec(), q.vec()); }

SphericalPoint arc_point(const GreatArc& arc, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        fail(ErrorCode::InvalidArgument, "arc parameter must lie in [0, 1]");
    }
    if (t == 0.0) return arc.a();
    if (t == 1.0) return arc.b();
    return SphericalPoint(arc.a().vec() * (1.0 - t) + arc.b().vec() * t);
}

PlanarPoint central_project(const SphericalPoint& p) {
    if (p.z() <= kAngularTol) {
        fail(ErrorCode::EquatorialPoint, "central projection needs a point in the open north hemisphere");
    }
    return {p.x() / p.z(), p.y() / p.z()};
}

SphericalPoint central_unproject(const PlanarPoint& x) {
    if (!std::isfinite(x.u) || !std::isfinite(x.v)) {
        fail(ErrorCode::InvalidArgument, "planar point must be finite");
    }
    return SphericalPoint(x.u, x.v, 1.0);
}

Vec3 blow_up(const Vec3& m, const Vec3& p) {
    const double c = dot(m, p);
    Vec3 w = m - p * c;
    // Second pass removes the residual component along p left by cancellation.
    w = w - p * dot(w, p);
    return normalized(w);
}

SphericalPoint blow_up(const SphericalPoint& m, const SphericalPoint& p) {
    const double s = norm(cross(m.vec(), p.vec()));
    if (s < kAngularTol) {
        fail(ErrorCode::PoleInput, "blow-up is undefined at the pole and its antipode");
    }
    return SphericalPoint(blow_up(m.vec(), p.vec()));
}

double lune_thickness(const Lune& lune) { return kPi - distance(lune.p(), lune.q()); }

bool hemisphere_contains(const Hemisphere& h, const SphericalPoint& q, double tol) {
    return dot(h.center, q) >= -tol;
}

double arc_distance(const Vec3& q, const Vec3& a, const Vec3& b) {
    const Vec3 c = cross(a, b);
    const double cn = norm(c);
    const double ends = std::min(distance(q, a), distance(q, b));
    if (cn < 1e-300) return ends;
    const Vec3 n = c / cn;
    const double qn = dot(q, n);
    const Vec3 foot = q - n * qn;
    if (norm(foot) < 1e-300) return ends;
    // Foot of the perpendicular lies on the arc iff it is on the inner side of
    // both endpoint planes.
    if (det(a, foot, n) >= 0.0 && det(foot, b, n) >= 0.0) {
        return std::asin(std::min(1.0, std::abs(qn)));
    }
    return ends;
}

ArcExtremum arc_min_dot(const Vec3& p, const Vec3& a, const Vec3& b) {
    const double len = distance(a, b);
    const Vec3 t0 = b - a * dot(a, b);
    const double tn = norm(t0);
    if (len < 1e-15 || tn < 1e-300) {
        const double pa = dot(p, a);
        const double pb = dot(p, b);
        return pa <= pb ? ArcExtremum{a, pa} : ArcExtremum{b, pb};
    }
    const Vec3 t = t0 / tn;
    const Extremum e = sinusoid_min(dot(p, a), dot(p, t), len);
    if (e.arg == 0.0) return {a, e.value};
    if (e.arg == len) return {b, dot(p, b)};
    return {a * std::cos(e.arg) + t * std::sin(e.arg), e.value};
}

Vec3 rotate_minimal(const Vec3& from, const Vec3& to, const Vec3& v) {
    const Vec3 axis = cross(from, to);
    const double s = norm(axis);
    const double c = dot(from, to);
    if (s < 1e-15) {
        if (c > 0.0) return v;
        // Half turn about any axis orthogonal to `from`.
        Vec3 k = std::abs(from.x) < 0.9 ? cross(from, Vec3{1, 0, 0}) : cross(from, Vec3{0, 1, 0});
        k = normalized(k);
        return k * (2.0 * dot(k, v)) - v;
    }
    const Vec3 k = axis / s;
    return v * c + cross(k, v) * s + k * (dot(k, v) * (1.0 - c));
}

Frame::Frame(const SphericalPoint& pole) : pole_(pole.vec()) {
    const Vec3 n{0, 0, 1};
    e1_ = normalized(rotate_minimal(n, pole_, {1, 0, 0}));
    e2_ = cross(pole_, e1_);
    e1_ = cross(e2_, pole_);
}

double Frame::azimuth(const Vec3& v) const { return wrap_angle(std::atan2(dot(v, e2_), dot(v, e1_))); }

}  // namespace wulff
