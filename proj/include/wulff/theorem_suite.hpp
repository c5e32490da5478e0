#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wulff/convex_region.hpp"
#include "wulff/report.hpp"
#include "wulff/wulff_pipeline.hpp"

namespace wulff {

inline constexpr double kExactTol = 1e-6;
/// Tolerance for everything computed on the rounded Reuleaux preset.
inline constexpr double kSmoothedTol = 1e-3;
/// Interior points used by the blow-up check keep this distance from the boundary.
inline constexpr double kInteriorMargin = 0.05;

struct SuiteConfig {
    std::uint64_t seed = 0;
    std::size_t trials = 1000;            // random polygons in the ensembles
    std::size_t samples = kDefaultSamples;  // K
    std::size_t interior_samples = 100;
    std::size_t arc_samples = 1000;
    std::size_t duality_polygons = 50;
    /// Replaces every default tolerance.
    std::optional<double> tol;
    /// Per check, keyed by family ("width_duality") or full name ("width_duality/octant").
    std::map<std::string, double> tolerances;
    /// Families to run; empty runs everything.
    std::vector<std::string> only;
    std::size_t threads = 1;  // 0: hardware concurrency
};

/// Seed of one check, derived from the master seed and the check name.
std::uint64_t check_seed(std::uint64_t master, std::string_view name);
/// Family part of a check name, before the first '/'.
std::string_view check_family(std::string_view name);

CheckReport check_constant_width_polytope(std::size_t trials, std::uint64_t seed, double tol);
CheckReport check_selfdual_equivalences(const PlanarConvexBody& w, double tol,
                                        std::size_t samples = kDefaultSamples);
CheckReport check_width_duality(const SphericalBody& body, double tol);
CheckReport check_strict_convexity(const SphericalBody& body, double tol);
/// Random polygons: none may have constant width below pi/2.
CheckReport check_strict_convexity_ensemble(std::size_t trials, std::uint64_t seed, double tol);
CheckReport check_arc_interior(const SphericalBody& body, std::size_t samples, double tol);
CheckReport check_blowup_property(const SphericalBody& body, std::size_t interior_samples, double tol,
                                  std::uint64_t seed);
CheckReport check_thickness_diameter_duality(const SphericalBody& body, double tol);
CheckReport check_thickness_diameter_ensemble(std::size_t polygons, std::uint64_t seed, double tol);

/// Every check over the preset suite and the random ensembles, in a fixed order.
std::vector<CheckReport> run_all(const SuiteConfig& config);

struct BodyUnderTest {
    std::string label;
    SphericalBody body;
    /// Planar Wulff shape the body lifts from, when there is one.
    std::optional<PlanarConvexBody> wulff;
    double tol = kExactTol;
    double selfdual_tol = kExactTol;
};

struct Preset;
BodyUnderTest preset_under_test(const Preset& preset, std::size_t samples = kDefaultSamples);
/// The lift of a Wulff polygon; many-vertex polygons get mesh-scaled tolerances.
BodyUnderTest wulff_under_test(const std::string& label, const PlanarConvexBody& w,
                               std::size_t samples = kDefaultSamples);
/// The per-body checks of the suite on one body.
std::vector<CheckReport> run_body_checks(const BodyUnderTest& body, const SuiteConfig& config);
std::vector<std::string> check_families();

}  // namespace wulff
