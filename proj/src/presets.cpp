#include "wulff/presets.hpp"

#include <charconv>
#include <cmath>

#include "wulff/reuleaux.hpp"

namespace wulff {

namespace {

const Vec3 kE1{1, 0, 0}, kE2{0, 1, 0}, kE3{0, 0, 1};

Vec3 rotate_to_pole(const Vec3& v) { return rotate_minimal(normalized(Vec3{1, 1, 1}), kE3, v); }

SphericalBody lift_polygon(const std::vector<Vec2>& verts) {
    std::vector<Vec3> out;
    for (const Vec2& v : verts) out.push_back(central_unproject({v.x, v.y}).vec());
    return SphericalPolygon(std::move(out));
}

}  // namespace

SphericalPolygon octant_polygon() { return SphericalPolygon(std::vector<Vec3>{kE1, kE2, kE3}); }

SphericalPolygon centered_octant() {
    return SphericalPolygon(std::vector<Vec3>{rotate_to_pole(kE1), rotate_to_pole(kE2), rotate_to_pole(kE3)});
}

SampledSphericalBody spherical_cap(double radius, const SphericalPoint& center, std::size_t samples) {
    return SampledSphericalBody::from_radial(center, [radius](double) { return radius; }, samples);
}

SampledSphericalBody ellipse_lift(double a, double b, std::size_t samples) {
    return SampledSphericalBody::from_radial(
        kNorthPole,
        [a, b](double phi) {
            const double c = std::cos(phi) / a;
            const double s = std::sin(phi) / b;
            return std::atan(1.0 / std::sqrt(c * c + s * s));
        },
        samples);
}

SampledSphericalBody reuleaux_body(double epsilon, std::size_t samples) {
    return SampledSphericalBody::from_radial(kNorthPole, reuleaux_radial(epsilon), samples);
}

std::vector<Vec2> square_vertices() { return {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}; }

std::vector<Vec2> triangle_sqrt2_vertices() {
    std::vector<Vec2> v;
    for (int i = 0; i < 3; ++i) {
        const double a = kHalfPi + i * kTwoPi / 3.0;
        v.push_back({std::sqrt(2.0) * std::cos(a), std::sqrt(2.0) * std::sin(a)});
    }
    return v;
}

std::optional<double> parse_angle(std::string_view text) {
    auto number = [](std::string_view s) -> std::optional<double> {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
        return v;
    };
    const auto pi = text.find("pi");
    if (pi == std::string_view::npos) return number(text);
    double scale = 1.0;
    if (pi > 0) {
        const auto m = number(text.substr(0, pi));
        if (!m) return std::nullopt;
        scale = *m;
    }
    std::string_view rest = text.substr(pi + 2);
    if (rest.empty()) return scale * kPi;
    if (rest.front() != '/') return std::nullopt;
    const auto d = number(rest.substr(1));
    if (!d || *d == 0.0) return std::nullopt;
    return scale * kPi / *d;
}

std::optional<Preset> find_preset(std::string_view name) {
    if (name == "disk") {
        return Preset{"disk", SupportFunction(ConstantGamma{1.0}),
                      [](std::size_t k) -> SphericalBody { return spherical_cap(kPi / 4, kNorthPole, k); }};
    }
    if (name == "ellipse21") {
        return Preset{"ellipse21", SupportFunction(EllipseGamma{2.0, 1.0}),
                      [](std::size_t k) -> SphericalBody { return ellipse_lift(2.0, 1.0, k); }};
    }
    if (name == "square") {
        return Preset{"square", SupportFunction(PolygonGamma{square_vertices()}),
                      [](std::size_t) { return lift_polygon(square_vertices()); }};
    }
    if (name == "triangle_sqrt2") {
        return Preset{"triangle_sqrt2", SupportFunction(PolygonGamma{triangle_sqrt2_vertices()}),
                      [](std::size_t) { return lift_polygon(triangle_sqrt2_vertices()); }};
    }
    if (name == "octant") {
        return Preset{"octant", std::nullopt, [](std::size_t) -> SphericalBody { return octant_polygon(); }};
    }
    if (name == "reuleaux") {
        return Preset{"reuleaux", SupportFunction(ReuleauxLift{0.0}),
                      [](std::size_t k) -> SphericalBody { return reuleaux_body(0.0, k); }};
    }
    if (name == "reuleaux_smoothed") {
        return Preset{"reuleaux_smoothed", SupportFunction(ReuleauxLift{kReuleauxRounding}),
                      [](std::size_t k) -> SphericalBody { return reuleaux_body(kReuleauxRounding, k); }};
    }
    if (name.starts_with("cap_")) {
        const auto r = parse_angle(name.substr(4));
        if (!r || !(*r > 0.0 && *r < kHalfPi)) return std::nullopt;
        const double radius = *r;
        return Preset{std::string(name), SupportFunction(ConstantGamma{std::tan(radius)}),
                      [radius](std::size_t k) -> SphericalBody { return spherical_cap(radius, kNorthPole, k); }};
    }
    return std::nullopt;
}

std::vector<std::string> preset_suite() {
    return {"disk",      "ellipse21", "square",      "triangle_sqrt2", "cap_pi/16",        "cap_pi/8",
            "cap_pi/4",  "cap_3pi/8", "octant",      "reuleaux",       "reuleaux_smoothed"};
}

Vec3 random_unit(Rng& rng) {
    std::normal_distribution<double> g;
    for (;;) {
        const Vec3 v{g(rng), g(rng), g(rng)};
        if (norm(v) > 1e-6) return normalized(v);
    }
}

SphericalPolygon random_spherical_polygon(Rng& rng) {
    std::uniform_int_distribution<int> count(3, 10);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double cap = 0.4 * kPi;
    for (;;) {
        const Frame f{SphericalPoint(random_unit(rng))};
        const int n = count(rng);
        std::vector<Vec3> pts;
        for (int i = 0; i < n; ++i) {
            // uniform in the cap by area
            const double rho = std::acos(1.0 - uni(rng) * (1.0 - std::cos(cap)));
            pts.push_back(f.point(kTwoPi * uni(rng), rho));
        }
        try {
            return s_conv_hull(std::span<const Vec3>(pts));
        } catch (const GeometryError&) {
        }
    }
}

SphericalPolygon random_rotation(const SphericalPolygon& p, Rng& rng) {
    // Uniform rotation: random axis image of N, then a random spin about it.
    const Vec3 to = random_unit(rng);
    std::uniform_real_distribution<double> uni(0.0, kTwoPi);
    const double spin = uni(rng);
    std::vector<Vec3> out;
    for (const Vec3& v : p.vertices()) {
        const Vec3 s{v.x * std::cos(spin) - v.y * std::sin(spin), v.x * std::sin(spin) + v.y * std::cos(spin), v.z};
        out.push_back(rotate_minimal(kE3, to, s));
    }
    return SphericalPolygon(std::move(out));
}

SampledGamma random_sampled_gamma(Rng& rng, std::size_t samples) {
    std::uniform_real_distribution<double> jitter(-0.3, 0.3);
    std::uniform_real_distribution<double> level(0.6, 1.6);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    SampledGamma g;
    // Smooth random trigonometric profile, sampled at jittered angles.
    const double base = level(rng);
    const double a2 = 0.25 * base * jitter(rng), a3 = 0.25 * base * jitter(rng);
    const double p2 = phase(rng), p3 = phase(rng);
    const double h = kTwoPi / static_cast<double>(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = h * (static_cast<double>(i) + 0.5 + jitter(rng));
        g.theta.push_back(t);
        g.gamma.push_back(base + a2 * std::cos(2 * t + p2) + a3 * std::cos(3 * t + p3));
    }
    return g;
}

}  // namespace wulff
