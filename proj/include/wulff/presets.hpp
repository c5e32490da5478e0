#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wulff/convex_region.hpp"
#include "wulff/wulff_pipeline.hpp"

namespace wulff {

/// Corner radius of the rounded Reuleaux preset.
inline constexpr double kReuleauxRounding = 0.01;

SphericalPolygon octant_polygon();
/// Octant rotated so that its center (1,1,1)/sqrt3 sits at the north pole;
/// it projects to the triangle of circumradius sqrt2.
SphericalPolygon centered_octant();

SampledSphericalBody spherical_cap(double radius, const SphericalPoint& center = kNorthPole,
                                   std::size_t samples = kDefaultSamples);
/// Exact lift of the ellipse x^2/a^2 + y^2/b^2 <= 1.
SampledSphericalBody ellipse_lift(double a, double b, std::size_t samples = kDefaultSamples);
SampledSphericalBody reuleaux_body(double epsilon, std::size_t samples = kDefaultSamples);

std::vector<Vec2> square_vertices();
std::vector<Vec2> triangle_sqrt2_vertices();

struct Preset {
    std::string name;
    /// Support function of the planar Wulff shape, when the preset has one.
    std::optional<SupportFunction> gamma;
    /// Exact spherical body (the lift of the Wulff shape, or a purely spherical preset).
    std::function<SphericalBody(std::size_t)> body;
};

/// disk, ellipse21, square, triangle_sqrt2, cap_<radius>, octant, reuleaux,
/// reuleaux_smoothed. Cap radii are radians, either a number or of the form
/// pi/8, 3pi/8.
std::optional<Preset> find_preset(std::string_view name);
std::vector<std::string> preset_suite();

/// Parses "0.3", "pi/8", "3pi/8", "pi"; nullopt on malformed input.
std::optional<double> parse_angle(std::string_view text);

// Seeded random generators.
using Rng = std::mt19937_64;

Vec3 random_unit(Rng& rng);
/// Hull of 3-10 points in a cap of radius 0.4 pi about a random center.
SphericalPolygon random_spherical_polygon(Rng& rng);
/// Uniformly random rotation applied to a polygon.
SphericalPolygon random_rotation(const SphericalPolygon& p, Rng& rng);
/// Random positive support function samples on a jittered direction grid.
SampledGamma random_sampled_gamma(Rng& rng, std::size_t samples = 24);

}  // namespace wulff
