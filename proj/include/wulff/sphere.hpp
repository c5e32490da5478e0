#pragma once

#include <optional>

#include "wulff/errors.hpp"
#include "wulff/vec.hpp"

namespace wulff {

inline constexpr double kAngularTol = 1e-9;  // pole / antipode degeneracy
inline constexpr double kUnitTol = 1e-12;    // unit-norm postconditions

/// Point of the unit sphere S^2 in ambient R^3. Always unit length.
class SphericalPoint {
public:
    /// North pole.
    SphericalPoint() : v_{0.0, 0.0, 1.0} {}
    /// Normalizes (x, y, z); throws InvalidArgument for zero or non-finite input.
    SphericalPoint(double x, double y, double z);
    explicit SphericalPoint(const Vec3& v) : SphericalPoint(v.x, v.y, v.z) {}

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    const Vec3& vec() const { return v_; }

    SphericalPoint operator-() const { return SphericalPoint(-v_); }
    bool operator==(const SphericalPoint&) const = default;

private:
    Vec3 v_;
};

inline double dot(const SphericalPoint& a, const SphericalPoint& b) { return dot(a.vec(), b.vec()); }

inline const SphericalPoint kNorthPole{0.0, 0.0, 1.0};

/// Point of the projection plane {last coordinate = 1}; the 1 is implicit.
struct PlanarPoint {
    double u = 0.0;
    double v = 0.0;

    Vec2 vec() const { return {u, v}; }
    bool operator==(const PlanarPoint&) const = default;
};

/// Closed hemisphere H(P) = {Q : P.Q >= 0}.
struct Hemisphere {
    SphericalPoint center;
};

/// Intersection of two hemispheres whose centers are neither equal nor opposite.
class Lune {
public:
    Lune(const SphericalPoint& p, const SphericalPoint& q);
    const SphericalPoint& p() const { return p_; }
    const SphericalPoint& q() const { return q_; }

private:
    SphericalPoint p_;
    SphericalPoint q_;
};

/// Shorter great-circle arc between two non-antipodal points.
class GreatArc {
public:
    GreatArc(const SphericalPoint& a, const SphericalPoint& b);
    const SphericalPoint& a() const { return a_; }
    const SphericalPoint& b() const { return b_; }

private:
    SphericalPoint a_;
    SphericalPoint b_;
};

/// Clamped arccos of a dot product.
double clamped_acos(double c);

double distance(const SphericalPoint& p, const SphericalPoint& q);
double distance(const Vec3& p, const Vec3& q);

/// Normalized convex combination (1-t)a + t b; t must lie in [0, 1].
SphericalPoint arc_point(const GreatArc& arc, double t);

/// Gnomonic projection from the north pole onto the plane z = 1.
PlanarPoint central_project(const SphericalPoint& p);
SphericalPoint central_unproject(const PlanarPoint& x);

/// Point at distance pi/2 from p on the great circle through m and p, on m's side.
SphericalPoint blow_up(const SphericalPoint& m, const SphericalPoint& p);
Vec3 blow_up(const Vec3& m, const Vec3& p);

double lune_thickness(const Lune& lune);

bool hemisphere_contains(const Hemisphere& h, const SphericalPoint& q, double tol);

/// Orthonormal frame (e1, e2, pole) obtained by rotating (x, y, N) with the
/// minimal rotation that takes N to the pole. Local coordinates are exact
/// isometries, so N-pole formulas apply after to_local().
class Frame {
public:
    explicit Frame(const SphericalPoint& pole);

    const Vec3& e1() const { return e1_; }
    const Vec3& e2() const { return e2_; }
    const Vec3& pole() const { return pole_; }

    Vec3 to_local(const Vec3& v) const { return {dot(v, e1_), dot(v, e2_), dot(v, pole_)}; }
    Vec3 from_local(const Vec3& v) const { return e1_ * v.x + e2_ * v.y + pole_ * v.z; }

    /// Unit tangent at the pole in fan direction phi.
    Vec3 direction(double phi) const { return e1_ * std::cos(phi) + e2_ * std::sin(phi); }
    /// Point at spherical distance rho from the pole along direction phi.
    Vec3 point(double phi, double rho) const {
        return pole_ * std::cos(rho) + direction(phi) * std::sin(rho);
    }
    /// Fan angle of v around the pole, in [0, 2pi).
    double azimuth(const Vec3& v) const;

    /// Gnomonic coordinates relative to the pole (requires v.pole > 0).
    Vec2 gnomonic(const Vec3& v) const {
        const double h = dot(v, pole_);
        return {dot(v, e1_) / h, dot(v, e2_) / h};
    }
    Vec3 ungnomonic(const Vec2& x) const { return normalized(from_local({x.x, x.y, 1.0})); }

private:
    Vec3 e1_;
    Vec3 e2_;
    Vec3 pole_;
};

/// Spherical distance from q to the great arc [a, b].
double arc_distance(const Vec3& q, const Vec3& a, const Vec3& b);

struct ArcExtremum {
    Vec3 point;
    double value = 0.0;
};

/// Point of the great arc [a, b] minimizing p.X, in closed form.
ArcExtremum arc_min_dot(const Vec3& p, const Vec3& a, const Vec3& b);

/// Angle between two unit vectors.
inline double angle_between(const Vec3& a, const Vec3& b) { return distance(a, b); }

/// Rotation taking `from` to `to` along the shortest great circle.
Vec3 rotate_minimal(const Vec3& from, const Vec3& to, const Vec3& v);

}  // namespace wulff
