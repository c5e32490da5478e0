#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "wulff/sphere.hpp"

namespace wulff {

inline constexpr std::size_t kDefaultSamples = 2048;

/// Spherical convex polygon, vertices counterclockwise seen from outside the
/// sphere. Construction validates hemisphericity, convexity and a non-empty
/// interior; degenerate input is rejected rather than repaired.
class SphericalPolygon {
public:
    explicit SphericalPolygon(const std::vector<SphericalPoint>& vertices);
    explicit SphericalPolygon(std::vector<Vec3> vertices);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vec3>& vertices() const { return vertices_; }
    /// Pole of edge (i, i+1); points into the polygon.
    const std::vector<Vec3>& edge_poles() const { return poles_; }
    const Vec3& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
    /// Normalized vertex sum; strictly interior.
    SphericalPoint interior_point() const;

private:
    std::vector<Vec3> vertices_;
    std::vector<Vec3> poles_;
};

/// Convex body sampled on a uniform fan of K directions around an interior
/// point. The boundary is also available as an exact radial function of the
/// fan angle, either analytic or the great-arc polyline through the samples.
class SampledSphericalBody {
public:
    using RadialFn = std::function<double(double)>;

    /// Boundary at spherical distance radius(phi) from center along fan angle phi.
    static SampledSphericalBody from_radial(const SphericalPoint& center, RadialFn radius,
                                            std::size_t samples = kDefaultSamples);
    /// Closed convex polyline (great arcs between consecutive points) around center.
    static SampledSphericalBody from_boundary(const SphericalPoint& center,
                                              const std::vector<Vec3>& polyline,
                                              std::size_t samples = kDefaultSamples);

    const SphericalPoint& interior_point() const { return data_->center; }
    const Frame& frame() const { return data_->frame; }
    std::size_t size() const { return data_->boundary.size(); }
    /// Mesh step of the fan, 2pi/K.
    double step() const;
    double fan_angle(std::size_t k) const { return step() * static_cast<double>(k); }
    const std::vector<Vec3>& boundary() const { return data_->boundary; }
    const std::vector<double>& radii() const { return data_->radii; }
    const Vec3& sample(std::size_t k) const { return data_->boundary[k % size()]; }

    double radius_at(double phi) const;
    Vec3 boundary_at(double phi) const;

    /// Source body when this body was produced by polar().
    std::optional<SampledSphericalBody> polar_source() const;

    /// Polar body on a K-fan around the same interior point. Boundary radii
    /// come from the support extremum of this body's exact boundary.
    SampledSphericalBody polar(std::size_t samples) const;

    /// Throws InvariantViolation when the samples are not locally convex or
    /// consecutive samples are further apart than max_gap.
    void validate(double max_gap) const;
    /// Largest spherical distance between consecutive samples.
    double max_gap() const;

private:
    struct Data {
        SphericalPoint center;
        Frame frame;
        std::vector<Vec3> boundary;
        std::vector<double> radii;
        RadialFn radius;
        std::shared_ptr<const Data> polar_of;
    };
    std::shared_ptr<const Data> data_;

    explicit SampledSphericalBody(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    static std::shared_ptr<Data> build(const SphericalPoint& center, RadialFn radius, std::size_t samples);
};

using SphericalBody = std::variant<SphericalPolygon, SampledSphericalBody>;

enum class Containment { Interior, Boundary, Exterior };

/// Hemisphere center c with c.v > 0 for every v, if one exists.
std::optional<SphericalPoint> find_hemisphere_witness(std::span<const SphericalPoint> points);
std::optional<Vec3> find_hemisphere_witness(std::span<const Vec3> points);

/// Spherical convex hull via the witness-centered gnomonic map and a planar hull.
SphericalPolygon s_conv_hull(std::span<const SphericalPoint> points);
SphericalPolygon s_conv_hull(std::span<const Vec3> points);

/// Intersection of H(v) over the vertices; vertices are the edge poles.
SphericalPolygon polar_polygon(const SphericalPolygon& p);

/// K-sample boundary of the polar body, fanned around the body's interior point.
SampledSphericalBody polar_sampled(const SphericalBody& body, std::size_t samples = kDefaultSamples);

/// Dense resampling of a polygon on a fan around `center` (exact radial function).
SampledSphericalBody sampled_from_polygon(const SphericalPolygon& p, const SphericalPoint& center,
                                          std::size_t samples = kDefaultSamples);

/// Polar of the body in its native representation.
SphericalBody polar(const SphericalBody& body, std::size_t samples = kDefaultSamples);

/// Signed spherical distance from q to the body boundary; negative inside.
double signed_boundary_distance(const SphericalBody& body, const Vec3& q);
Containment contains(const SphericalBody& body, const SphericalPoint& q, double tol);

/// Boundary of the polar body: centers of all supporting hemispheres.
SphericalBody supporting_centers(const SphericalBody& body, std::size_t samples = kDefaultSamples);

struct SupportingHemispheres {
    std::vector<Hemisphere> hemispheres;  // one, or the two extremes of a fan
    bool fan = false;

    /// Member of the fan at parameter t in [0, 1] (spherical interpolation).
    Hemisphere at(double t) const;
};

SupportingHemispheres supporting_hemisphere_at(const SphericalBody& body, const SphericalPoint& p);

/// Largest angle between one-sided supporting normals along the boundary.
double max_fan_extent(const SphericalBody& body, double resolve_below);
bool is_smooth(const SphericalBody& body, double tol);

SphericalPoint interior_point(const SphericalBody& body);
/// Mesh step used for tolerances: 2pi/K for sampled bodies, 0 for polygons.
double mesh_step(const SphericalBody& body);

/// Largest vertex-wise distance after aligning the cyclic start; infinity on size mismatch.
double vertex_deviation(const SphericalPolygon& a, const SphericalPolygon& b);

/// Boundary points of the body for sampling-based checks: polygon vertices plus
/// `per_edge` interior points per edge, or the sampled mesh.
std::vector<Vec3> boundary_samples(const SphericalBody& body, std::size_t per_edge = 16);

}  // namespace wulff
