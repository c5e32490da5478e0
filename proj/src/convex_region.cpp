#include "wulff/convex_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wulff/numeric.hpp"
#include "wulff/planar.hpp"

namespace wulff {

namespace {

constexpr double kHullEps = 1e-11;
constexpr double kTurnEps = 1e-13;
constexpr double kConvexSlack = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool strictly_positive(std::span<const Vec3> pts, const Vec3& c) {
    return std::all_of(pts.begin(), pts.end(), [&](const Vec3& v) { return dot(c, v) > 0.0; });
}

double min_dot(std::span<const Vec3> pts, const Vec3& c) {
    double m = std::numeric_limits<double>::infinity();
    for (const Vec3& v : pts) m = std::min(m, dot(c, v));
    return m;
}

std::vector<Vec3> to_vecs(std::span<const SphericalPoint> pts) {
    std::vector<Vec3> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(p.vec());
    return out;
}

// Exit parameter of the ray cos t c + sin t u from H(n), for c.n > 0.
double ray_exit(const Vec3& c, const Vec3& u, const Vec3& n) { return std::atan2(dot(c, n), -dot(u, n)); }

// Angle between the normals of chords (a, b) and (c, d): total turning across b..c.
double chord_turn(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    return angle_between(normalized(cross(a, b)), normalized(cross(c, d)));
}

}  // namespace

// ---------------------------------------------------------------------------
// SphericalPolygon

SphericalPolygon::SphericalPolygon(const std::vector<SphericalPoint>& vertices)
    : SphericalPolygon(to_vecs(vertices)) {}

SphericalPolygon::SphericalPolygon(std::vector<Vec3> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) fail(ErrorCode::Degenerate, "spherical polygon needs at least 3 vertices");
    for (Vec3& v : vertices_) v = SphericalPoint(v).vec();
    if (!find_hemisphere_witness(std::span<const Vec3>(vertices_))) {
        fail(ErrorCode::NotHemispherical, "polygon vertices are not contained in an open hemisphere");
    }
    poles_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 c = cross(vertices_[i], vertices_[(i + 1) % n]);
        if (norm(c) < 1e-15) fail(ErrorCode::Degenerate, "polygon has coincident adjacent vertices");
        poles_[i] = normalized(c);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3& a = vertices_[(i + n - 1) % n];
        const Vec3& b = vertices_[i];
        const Vec3& c = vertices_[(i + 1) % n];
        const double turn = det(a, b, c) / (norm(b - a) * norm(c - b));
        if (std::abs(turn) <= kTurnEps) fail(ErrorCode::Degenerate, "polygon has a collinear vertex triple");
        if (turn < 0.0) fail(ErrorCode::InvariantViolation, "polygon is not convex counterclockwise");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // the edge's own endpoints are on it by construction
            if (j == i || j == (i + 1) % n) continue;
            if (dot(poles_[i], vertices_[j]) < -kConvexSlack) {
                fail(ErrorCode::InvariantViolation, "polygon is not convex");
            }
        }
    }
}

SphericalPoint SphericalPolygon::interior_point() const {
    Vec3 s{};
    for (const Vec3& v : vertices_) s += v;
    return SphericalPoint(s);
}

// ---------------------------------------------------------------------------
// SampledSphericalBody

double SampledSphericalBody::step() const { return kTwoPi / static_cast<double>(size()); }

std::shared_ptr<SampledSphericalBody::Data> SampledSphericalBody::build(const SphericalPoint& center,
                                                                        RadialFn radius,
                                                                        std::size_t samples) {
    if (samples < 8) fail(ErrorCode::InvalidArgument, "sampled body needs at least 8 samples");
    auto d = std::make_shared<Data>(Data{center, Frame(center), {}, {}, std::move(radius), nullptr});
    d->boundary.resize(samples);
    d->radii.resize(samples);
    const double h = kTwoPi / static_cast<double>(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double phi = h * static_cast<double>(k);
        const double rho = d->radius(phi);
        if (!(rho > 0.0 && rho < kHalfPi)) {
            fail(ErrorCode::InvariantViolation,
                 "boundary must lie in the open hemisphere around the interior point");
        }
        d->radii[k] = rho;
        d->boundary[k] = d->frame.point(phi, rho);
    }
    return d;
}

SampledSphericalBody SampledSphericalBody::from_radial(const SphericalPoint& center, RadialFn radius,
                                                       std::size_t samples) {
    SampledSphericalBody body(build(center, std::move(radius), samples));
    body.validate(std::numeric_limits<double>::infinity());
    return body;
}

SampledSphericalBody SampledSphericalBody::from_boundary(const SphericalPoint& center,
                                                         const std::vector<Vec3>& polyline,
                                                         std::size_t samples) {
    const Frame frame(center);
    std::vector<Vec2> plane;
    plane.reserve(polyline.size());
    for (const Vec3& p : polyline) {
        if (dot(p, center.vec()) <= kAngularTol) {
            fail(ErrorCode::InvariantViolation, "boundary must lie in the open hemisphere around the interior point");
        }
        plane.push_back(frame.gnomonic(p));
    }
    auto radial = std::make_shared<PlanarRadial>(std::move(plane));
    return from_radial(
        center, [radial](double phi) { return std::atan((*radial)(phi)); }, samples);
}

double SampledSphericalBody::radius_at(double phi) const { return data_->radius(wrap_angle(phi)); }

Vec3 SampledSphericalBody::boundary_at(double phi) const {
    phi = wrap_angle(phi);
    return data_->frame.point(phi, data_->radius(phi));
}

std::optional<SampledSphericalBody> SampledSphericalBody::polar_source() const {
    if (!data_->polar_of) return std::nullopt;
    return SampledSphericalBody(data_->polar_of);
}

double SampledSphericalBody::max_gap() const {
    double gap = 0.0;
    for (std::size_t k = 0; k < size(); ++k) gap = std::max(gap, distance(sample(k), sample(k + 1)));
    return gap;
}

void SampledSphericalBody::validate(double max_gap_allowed) const {
    const std::size_t n = size();
    for (std::size_t k = 0; k < n; ++k) {
        const double turn = det(sample(k + n - 1), sample(k), sample(k + 1));
        if (turn < -1e-8) fail(ErrorCode::InvariantViolation, "sampled boundary is not locally convex");
    }
    if (max_gap() > max_gap_allowed) {
        fail(ErrorCode::InvariantViolation, "sampled boundary spacing exceeds the mesh parameter");
    }
}

SampledSphericalBody SampledSphericalBody::polar(std::size_t samples) const {
    if (data_->polar_of && data_->polar_of->boundary.size() == samples) {
        return SampledSphericalBody(data_->polar_of);
    }
    const auto src = data_;
    const Vec3 c = src->center.vec();
    const std::size_t ns = src->boundary.size();
    const double hs = kTwoPi / static_cast<double>(ns);
    const double h = kTwoPi / static_cast<double>(samples);

    // Ray exit from H(P) along u is decreasing in -(u.P)/(c.P), which is
    // -tan r(psi) cos(psi - phi) in the fan frame; the polar boundary along u
    // is the smallest exit over the source boundary.
    auto lean = [src](double phi, double psi) { return -std::tan(src->radius(wrap_angle(psi))) * std::cos(psi - phi); };

    auto support = std::make_shared<std::vector<double>>(samples);
    std::vector<double> radii(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const Vec3 u = src->frame.direction(h * static_cast<double>(k));
        std::size_t best = 0;
        double best_ratio = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < ns; ++j) {
            const Vec3& p = src->boundary[j];
            const double ratio = -dot(u, p) / dot(c, p);
            if (ratio > best_ratio) {
                best_ratio = ratio;
                best = j;
            }
        }
        const double psi0 = hs * static_cast<double>(best);
        const double phi = h * static_cast<double>(k);
        const Extremum e = golden_max([&](double psi) { return lean(phi, psi); }, psi0 - hs, psi0 + hs);
        (*support)[k] = e.arg;
        radii[k] = std::atan2(1.0, e.value);
    }

    auto radius = [support, lean, h, hs, samples](double phi) {
        const auto k = static_cast<std::size_t>(std::floor(phi / h)) % samples;
        const double lo = (*support)[k];
        double diff = wrap_angle((*support)[(k + 1) % samples] - lo);
        if (diff > kPi) diff -= kTwoPi;
        const double a = std::min(lo, lo + diff) - hs;
        const double b = std::max(lo, lo + diff) + hs;
        return std::atan2(1.0, golden_max([&](double psi) { return lean(phi, psi); }, a, b).value);
    };

    auto d = std::make_shared<Data>(Data{src->center, src->frame, {}, std::move(radii), radius, src});
    d->boundary.resize(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        if (!(d->radii[k] > 0.0 && d->radii[k] < kHalfPi)) {
            fail(ErrorCode::Degenerate, "polar body has empty interior");
        }
        d->boundary[k] = d->frame.point(h * static_cast<double>(k), d->radii[k]);
    }
    return SampledSphericalBody(std::move(d));
}

// ---------------------------------------------------------------------------
// Hemisphere witness and hull

std::optional<Vec3> find_hemisphere_witness(std::span<const Vec3> points) {
    if (points.empty()) return std::nullopt;
    Vec3 sum{};
    for (const Vec3& v : points) sum += v;
    if (norm(sum) > 1e-300) {
        const Vec3 c = normalized(sum);
        if (strictly_positive(points, c)) return c;
    }
    // Perceptron-style correction: push the candidate toward the worst point.
    Vec3 c = points.front();
    for (int iter = 0; iter < 2000; ++iter) {
        const Vec3* worst = &points.front();
        double w = std::numeric_limits<double>::infinity();
        for (const Vec3& v : points) {
            if (dot(c, v) < w) {
                w = dot(c, v);
                worst = &v;
            }
        }
        const double n = norm(c);
        if (n > 1e-300 && w > 0.0) return c / n;
        c += *worst;
        if (norm(c) < 1e-300) break;
    }
    // Exhaustive fallback: vertices of the feasible region are normalized
    // cross products of point pairs; their average is strictly feasible when
    // the region has interior.
    if (points.size() > 256) return std::nullopt;
    Vec3 acc{};
    std::size_t found = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Vec3 n = cross(points[i], points[j]);
            if (norm(n) < 1e-15) continue;
            for (const Vec3& cand : {normalized(n), -normalized(n)}) {
                if (min_dot(points, cand) >= -1e-12) {
                    acc += cand;
                    ++found;
                }
            }
        }
    }
    if (found > 0 && norm(acc) > 1e-300) {
        const Vec3 cand = normalized(acc);
        if (strictly_positive(points, cand)) return cand;
    }
    return std::nullopt;
}

std::optional<SphericalPoint> find_hemisphere_witness(std::span<const SphericalPoint> points) {
    const auto vecs = to_vecs(points);
    auto c = find_hemisphere_witness(std::span<const Vec3>(vecs));
    if (!c) return std::nullopt;
    return SphericalPoint(*c);
}

SphericalPolygon s_conv_hull(std::span<const Vec3> points) {
    const auto witness = find_hemisphere_witness(points);
    if (!witness) fail(ErrorCode::NotHemispherical, "point set is not contained in an open hemisphere");
    const Frame frame{SphericalPoint(*witness)};
    std::vector<Vec2> plane;
    plane.reserve(points.size());
    for (const Vec3& p : points) plane.push_back(frame.gnomonic(p));
    const auto idx = convex_hull_indices(plane, kHullEps);
    if (idx.size() < 3) fail(ErrorCode::Degenerate, "spherical hull has empty interior");
    std::vector<Vec2> hull_plane;
    for (std::size_t i : idx) hull_plane.push_back(plane[i]);
    double extent = 0.0;
    for (const Vec2& p : hull_plane) extent = std::max(extent, norm(p - hull_plane.front()));
    if (polygon_area(hull_plane) <= 1e-12 * extent * extent) {
        fail(ErrorCode::Degenerate, "spherical hull has empty interior");
    }
    std::vector<Vec3> verts;
    verts.reserve(idx.size());
    for (std::size_t i : idx) verts.push_back(points[i]);
    return SphericalPolygon(std::move(verts));
}

SphericalPolygon s_conv_hull(std::span<const SphericalPoint> points) {
    const auto vecs = to_vecs(points);
    return s_conv_hull(std::span<const Vec3>(vecs));
}

// ---------------------------------------------------------------------------
// Polar sets

SphericalPolygon polar_polygon(const SphericalPolygon& p) {
    try {
        return SphericalPolygon(p.edge_poles());
    } catch (const GeometryError& e) {
        fail(ErrorCode::Degenerate, std::string("polar polygon is degenerate: ") + e.what());
    }
}

SampledSphericalBody sampled_from_polygon(const SphericalPolygon& p, const SphericalPoint& center,
                                          std::size_t samples) {
    const Vec3 c = center.vec();
    for (const Vec3& n : p.edge_poles()) {
        if (dot(c, n) <= 0.0) fail(ErrorCode::NotInterior, "fan center must be interior to the polygon");
    }
    const Frame frame(center);
    auto poles = p.edge_poles();
    return SampledSphericalBody::from_radial(
        center,
        [poles, frame, c](double phi) {
            const Vec3 u = frame.direction(phi);
            double t = kPi;
            for (const Vec3& n : poles) t = std::min(t, ray_exit(c, u, n));
            return t;
        },
        samples);
}

SampledSphericalBody polar_sampled(const SphericalBody& body, std::size_t samples) {
    return std::visit(Overloaded{
                          [&](const SphericalPolygon& p) {
                              const SphericalPolygon q = polar_polygon(p);
                              return sampled_from_polygon(q, q.interior_point(), samples);
                          },
                          [&](const SampledSphericalBody& s) { return s.polar(samples); },
                      },
                      body);
}

SphericalBody polar(const SphericalBody& body, std::size_t samples) {
    return std::visit(Overloaded{
                          [&](const SphericalPolygon& p) -> SphericalBody { return polar_polygon(p); },
                          [&](const SampledSphericalBody& s) -> SphericalBody { return s.polar(samples); },
                      },
                      body);
}

SphericalBody supporting_centers(const SphericalBody& body, std::size_t samples) { return polar(body, samples); }

// ---------------------------------------------------------------------------
// Membership

double signed_boundary_distance(const SphericalBody& body, const Vec3& q) {
    return std::visit(
        Overloaded{
            [&](const SphericalPolygon& p) {
                bool inside = true;
                double d = std::numeric_limits<double>::infinity();
                const std::size_t n = p.size();
                for (std::size_t i = 0; i < n; ++i) {
                    if (dot(p.edge_poles()[i], q) < 0.0) inside = false;
                    d = std::min(d, arc_distance(q, p.vertex(i), p.vertex(i + 1)));
                }
                return inside ? -d : d;
            },
            [&](const SampledSphericalBody& s) {
                const Frame& f = s.frame();
                const Vec3 c = s.interior_point().vec();
                bool inside = false;
                if (dot(q, c) > 0.0) {
                    inside = distance(c, q) <= s.radius_at(f.azimuth(q));
                }
                std::size_t best = 0;
                double best_dot = -2.0;
                for (std::size_t k = 0; k < s.size(); ++k) {
                    const double dq = dot(q, s.sample(k));
                    if (dq > best_dot) {
                        best_dot = dq;
                        best = k;
                    }
                }
                const double h = s.step();
                const double phi0 = h * static_cast<double>(best);
                const Extremum e = golden_min([&](double phi) { return distance(q, s.boundary_at(phi)); },
                                              phi0 - 2.0 * h, phi0 + 2.0 * h);
                const double d = std::min(e.value, distance(q, s.sample(best)));
                return inside ? -d : d;
            },
        },
        body);
}

Containment contains(const SphericalBody& body, const SphericalPoint& q, double tol) {
    const double d = signed_boundary_distance(body, q.vec());
    if (std::abs(d) <= tol) return Containment::Boundary;
    return d < 0.0 ? Containment::Interior : Containment::Exterior;
}

// ---------------------------------------------------------------------------
// Supporting hemispheres and smoothness

Hemisphere SupportingHemispheres::at(double t) const {
    if (hemispheres.size() == 1) return hemispheres.front();
    const Vec3 a = hemispheres[0].center.vec();
    const Vec3 b = hemispheres[1].center.vec();
    return {SphericalPoint(a * (1.0 - t) + b * t)};
}

SupportingHemispheres supporting_hemisphere_at(const SphericalBody& body, const SphericalPoint& p) {
    return std::visit(
        Overloaded{
            [&](const SphericalPolygon& poly) {
                if (std::abs(signed_boundary_distance(body, p.vec())) > kAngularTol) {
                    fail(ErrorCode::NotOnBoundary, "point is not on the polygon boundary");
                }
                const std::size_t n = poly.size();
                for (std::size_t i = 0; i < n; ++i) {
                    if (distance(p.vec(), poly.vertex(i)) <= kAngularTol) {
                        return SupportingHemispheres{{Hemisphere{SphericalPoint(poly.edge_poles()[(i + n - 1) % n])},
                                                      Hemisphere{SphericalPoint(poly.edge_poles()[i])}},
                                                     true};
                    }
                }
                std::size_t best = 0;
                double best_d = std::numeric_limits<double>::infinity();
                for (std::size_t i = 0; i < n; ++i) {
                    const double d = arc_distance(p.vec(), poly.vertex(i), poly.vertex(i + 1));
                    if (d < best_d) {
                        best_d = d;
                        best = i;
                    }
                }
                return SupportingHemispheres{{Hemisphere{SphericalPoint(poly.edge_poles()[best])}}, false};
            },
            [&](const SampledSphericalBody& s) {
                if (std::abs(signed_boundary_distance(body, p.vec())) > 1e-8) {
                    fail(ErrorCode::NotOnBoundary, "point is not on the sampled boundary");
                }
                const double phi = s.frame().azimuth(p.vec());
                const Vec3 b = s.boundary_at(phi);
                constexpr double kKinkStep = 1e-7;
                const Vec3 before = normalized(cross(s.boundary_at(phi - kKinkStep), b));
                const Vec3 after = normalized(cross(b, s.boundary_at(phi + kKinkStep)));
                if (angle_between(before, after) <= 1e-6) {
                    constexpr double kNormalStep = 1e-5;
                    Vec3 n = cross(s.boundary_at(phi - kNormalStep), s.boundary_at(phi + kNormalStep));
                    n = n - b * dot(n, b);
                    return SupportingHemispheres{{Hemisphere{SphericalPoint(n)}}, false};
                }
                return SupportingHemispheres{{Hemisphere{SphericalPoint(before)}, Hemisphere{SphericalPoint(after)}},
                                             true};
            },
        },
        body);
}

double max_fan_extent(const SphericalBody& body, double resolve_below) {
    return std::visit(
        Overloaded{
            [&](const SphericalPolygon& poly) {
                double m = 0.0;
                const std::size_t n = poly.size();
                for (std::size_t i = 0; i < n; ++i) {
                    m = std::max(m, angle_between(poly.edge_poles()[(i + n - 1) % n], poly.edge_poles()[i]));
                }
                return m;
            },
            [&](const SampledSphericalBody& s) {
                // Turning across a window [a, b] measured between the chords just
                // outside it. A kink keeps this large at every scale while smooth
                // turning shrinks with the window, so following the half with the
                // larger turning isolates the worst kink of each mesh interval.
                auto window_turn = [&](double a, double b) {
                    const double w = 0.5 * (b - a);
                    return chord_turn(s.boundary_at(a - w), s.boundary_at(a), s.boundary_at(b),
                                      s.boundary_at(b + w));
                };
                const double h = s.step();
                double m = 0.0;
                for (std::size_t k = 0; k < s.size(); ++k) {
                    const double turn = chord_turn(s.sample(k + s.size() - 1), s.sample(k), s.sample(k + 1),
                                                   s.sample(k + 2));
                    if (turn <= 0.5 * resolve_below) {
                        m = std::max(m, turn);
                        continue;
                    }
                    double a = h * static_cast<double>(k);
                    double b = a + h;
                    double t = turn;
                    while (b - a > 1e-8) {
                        const double mid = 0.5 * (a + b);
                        const double left = window_turn(a, mid);
                        const double right = window_turn(mid, b);
                        if (left >= right) {
                            b = mid;
                            t = left;
                        } else {
                            a = mid;
                            t = right;
                        }
                    }
                    m = std::max(m, t);
                }
                return m;
            },
        },
        body);
}

bool is_smooth(const SphericalBody& body, double tol) {
    if (std::holds_alternative<SphericalPolygon>(body)) return false;
    return max_fan_extent(body, tol) <= tol;
}

// ---------------------------------------------------------------------------
// Misc

SphericalPoint interior_point(const SphericalBody& body) {
    return std::visit(Overloaded{
                          [](const SphericalPolygon& p) { return p.interior_point(); },
                          [](const SampledSphericalBody& s) { return s.interior_point(); },
                      },
                      body);
}

double mesh_step(const SphericalBody& body) {
    if (const auto* s = std::get_if<SampledSphericalBody>(&body)) return s->step();
    return 0.0;
}

double vertex_deviation(const SphericalPolygon& a, const SphericalPolygon& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    const std::size_t n = a.size();
    std::size_t offset = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        const double d = distance(a.vertex(0), b.vertex(j));
        if (d < best) {
            best = d;
            offset = j;
        }
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, distance(a.vertex(i), b.vertex(i + offset)));
    return worst;
}

std::vector<Vec3> boundary_samples(const SphericalBody& body, std::size_t per_edge) {
    return std::visit(Overloaded{
                          [&](const SphericalPolygon& p) {
                              std::vector<Vec3> out;
                              for (std::size_t i = 0; i < p.size(); ++i) {
                                  const Vec3& a = p.vertex(i);
                                  const Vec3& b = p.vertex(i + 1);
                                  out.push_back(a);
                                  for (std::size_t j = 1; j <= per_edge; ++j) {
                                      const double t = static_cast<double>(j) / static_cast<double>(per_edge + 1);
                                      out.push_back(normalized(a * (1.0 - t) + b * t));
                                  }
                              }
                              return out;
                          },
                          [](const SampledSphericalBody& s) { return s.boundary(); },
                      },
                      body);
}

}  // namespace wulff
