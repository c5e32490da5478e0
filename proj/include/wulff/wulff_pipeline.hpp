#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "wulff/convex_region.hpp"

namespace wulff {

struct ConstantGamma {
    double c = 1.0;
};

/// gamma(theta) = sqrt(a^2 cos^2 theta + b^2 sin^2 theta)
struct EllipseGamma {
    double a = 1.0;
    double b = 1.0;
};

/// Support function of a planar convex polygon containing the origin.
struct PolygonGamma {
    std::vector<Vec2> vertices;
};

/// Samples (theta_i, gamma_i), theta strictly increasing in [0, 2pi);
/// interpolated piecewise linearly with wraparound.
struct SampledGamma {
    std::vector<double> theta;
    std::vector<double> gamma;
};

/// Support function of the central projection of the (corner-rounded)
/// spherical Reuleaux triangle of width pi/2 centered at the north pole.
struct ReuleauxLift {
    double epsilon = 0.0;
};

class SupportFunction {
public:
    using Spec = std::variant<ConstantGamma, EllipseGamma, PolygonGamma, SampledGamma, ReuleauxLift>;

    /// Validates the spec; throws InvalidArgument / InvariantViolation.
    explicit SupportFunction(Spec spec);

    double operator()(double theta) const { return eval_(theta); }
    const Spec& spec() const { return spec_; }
    /// Outward normal angles of the flat sides of a polygonal Wulff shape;
    /// empty for support functions without facets.
    std::vector<double> facet_normals() const;

private:
    Spec spec_;
    std::function<double(double)> eval_;
};

struct HalfPlane {
    Vec2 theta;   // unit outward direction
    double gamma; // offset: x.theta <= gamma

    HalfPlane(Vec2 theta, double gamma);
};

/// Convex polygon, counterclockwise, origin strictly interior.
class PlanarConvexBody {
public:
    explicit PlanarConvexBody(std::vector<Vec2> vertices);

    const std::vector<Vec2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Vec2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

private:
    std::vector<Vec2> vertices_;
};

struct WulffPair {
    PlanarConvexBody primal;
    PlanarConvexBody dual;
    double hausdorff_distance = 0.0;
    bool self_dual = false;
};

inline constexpr std::size_t kDefaultDirections = 2048;
/// Wulff polygons with at most this many vertices lift to spherical polygons;
/// larger ones lift to sampled bodies.
inline constexpr std::size_t kMaxLiftedPolygon = 64;

std::vector<HalfPlane> sample_gamma(const SupportFunction& sf, std::size_t k);

/// Uniform directions plus the exact facet normals, so that polygonal shapes
/// are reconstructed exactly whatever k is.
std::vector<HalfPlane> wulff_halfplanes(const SupportFunction& sf, std::size_t k);
PlanarConvexBody wulff_shape(const SupportFunction& sf, std::size_t k);

PlanarConvexBody wulff_construct(const std::vector<HalfPlane>& halfplanes);

SphericalBody spherical_wulff(const PlanarConvexBody& w, std::size_t samples = kDefaultSamples);

/// Negated planar polar {y : x.y >= -1 for all x in W}.
PlanarConvexBody dual_wulff(const PlanarConvexBody& w);

/// Dual via lift, blow-up, spherical hull, spherical polar and projection.
PlanarConvexBody dual_via_pipeline(const SupportFunction& sf, std::size_t k);

/// Boundary points P with H(blow_up(M, P)) supporting the body at P.
std::vector<SphericalPoint> boundary_support_intersection(const SphericalBody& body, const SphericalPoint& m);

WulffPair is_self_dual(const PlanarConvexBody& w, double tol);

}  // namespace wulff
