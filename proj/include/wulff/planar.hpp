#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wulff/vec.hpp"

namespace wulff {

/// Indices of the convex hull of pts in counterclockwise order (Andrew's
/// monotone chain). Points closer than `eps` (relative) to a hull edge line
/// are treated as collinear and dropped.
std::vector<std::size_t> convex_hull_indices(std::span<const Vec2> pts, double eps = 1e-13);

double polygon_area(std::span<const Vec2> poly);

/// Euclidean distance from p to the segment [a, b].
double segment_distance(Vec2 p, Vec2 a, Vec2 b);

/// Signed distance from p to the boundary of a CCW convex polygon: negative inside.
double convex_signed_distance(std::span<const Vec2> poly, Vec2 p);

/// Ray distance from the origin to the boundary of a CCW convex polygon that
/// strictly contains the origin, as a function of the ray angle.
class PlanarRadial {
public:
    explicit PlanarRadial(std::vector<Vec2> ccw_polygon);

    double operator()(double phi) const;
    /// Index i of the edge (i, i+1) hit by the ray at angle phi.
    std::size_t edge_at(double phi) const;
    const std::vector<Vec2>& polygon() const { return poly_; }

private:
    std::vector<Vec2> poly_;     // rotated so that angles_ is ascending
    std::vector<double> angles_; // vertex angles in [0, 2pi)
};

}  // namespace wulff
