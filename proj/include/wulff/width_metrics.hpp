#pragma once

#include "wulff/convex_region.hpp"
#include "wulff/report.hpp"
#include "wulff/wulff_pipeline.hpp"

namespace wulff {

struct WidthReport {
    double min_width = 0.0;
    double max_width = 0.0;
    SphericalPoint argmin_center;
    SphericalPoint argmax_center;
    bool constant = false;
    double delta = 0.0;  // midpoint of the range; meaningful when constant
};

struct DiameterReport {
    double diameter = 0.0;
    SphericalPoint witness_p;
    SphericalPoint witness_q;
    bool constant = false;
    /// Smallest over tested boundary points P of max_Q |PQ|.
    double min_farthest = 0.0;
    SphericalPoint worst_point;
};

/// Supporting tolerance for hemisphere centers.
inline constexpr double kSupportTol = 1e-8;

/// pi - max over supporting centers Q of |center(H) Q|.
double width_wrt(const SphericalBody& body, const Hemisphere& h);
/// Same with the polar already at hand (polar must be polar(body)).
double width_wrt(const SphericalBody& body, const SphericalBody& polar, const Hemisphere& h);

/// Minimum width over the supporting hemispheres.
double thickness(const SphericalBody& body);

DiameterReport diameter(const SphericalBody& body);

WidthReport is_constant_width(const SphericalBody& body, double tol);
DiameterReport is_constant_diameter(const SphericalBody& body, double tol);

/// Largest distance from q to a point of the body, with the maximizer.
std::pair<double, Vec3> farthest_point(const SphericalBody& body, const Vec3& q);

double hausdorff_planar(const PlanarConvexBody& a, const PlanarConvexBody& b);
double hausdorff_spherical(const SphericalBody& a, const SphericalBody& b);

/// Hemisphere orthogonal to the diameter arc PQ at P, containing Q, must support the body.
CheckReport diameter_support_check(const SphericalBody& body, double tol = 1e-8);

}  // namespace wulff
