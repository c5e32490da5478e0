#pragma once

#include <array>

#include "wulff/convex_region.hpp"

namespace wulff {

/// Spherical Reuleaux triangle of width pi/2 centered at the north pole, with
/// corners rounded by circles of radius epsilon (epsilon = 0 gives the sharp
/// triangle). The rounded body is the epsilon-parallel body of the Reuleaux
/// triangle of width pi/2 - 2 epsilon, so its width stays pi/2.
struct ReuleauxGeometry {
    double epsilon = 0.0;
    std::array<Vec3, 3> vertices;  // centers of the corner circles
    double side_radius = 0.0;      // radius of the side arcs about the opposite vertex
};

ReuleauxGeometry reuleaux_geometry(double epsilon);

/// Exact radial function about the north pole.
SampledSphericalBody::RadialFn reuleaux_radial(double epsilon);

}  // namespace wulff
