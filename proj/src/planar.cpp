#include "wulff/planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "wulff/errors.hpp"
#include "wulff/numeric.hpp"

namespace wulff {

namespace {

// Positive when c lies to the left of the directed line a->b, scaled so the
// collinearity test is relative to the segment lengths.
bool left_turn(Vec2 a, Vec2 b, Vec2 c, double eps) {
    const Vec2 ab = b - a;
    const Vec2 ac = c - a;
    const double scale = norm(ab) * norm(ac);
    return cross(ab, ac) > eps * scale;
}

}  // namespace

std::vector<std::size_t> convex_hull_indices(std::span<const Vec2> pts, double eps) {
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (pts[i].x != pts[j].x) return pts[i].x < pts[j].x;
        if (pts[i].y != pts[j].y) return pts[i].y < pts[j].y;
        return i < j;
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t i, std::size_t j) {
                                return pts[i].x == pts[j].x && pts[i].y == pts[j].y;
                            }),
                order.end());
    if (order.size() < 3) return order;

    std::vector<std::size_t> hull(2 * order.size());
    std::size_t k = 0;
    for (std::size_t i : order) {
        while (k >= 2 && !left_turn(pts[hull[k - 2]], pts[hull[k - 1]], pts[i], eps)) --k;
        hull[k++] = i;
    }
    const std::size_t lower = k + 1;
    for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
        while (k >= lower && !left_turn(pts[hull[k - 2]], pts[hull[k - 1]], pts[*it], eps)) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

double polygon_area(std::span<const Vec2> poly) {
    double a = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        a += cross(poly[i], poly[(i + 1) % poly.size()]);
    }
    return 0.5 * a;
}

namespace {

double segment_distance2(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Vec2 d = p - (a + ab * t);
    return dot(d, d);
}

}  // namespace

double segment_distance(Vec2 p, Vec2 a, Vec2 b) { return std::sqrt(segment_distance2(p, a, b)); }

double convex_signed_distance(std::span<const Vec2> poly, Vec2 p) {
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % poly.size()];
        if (cross(b - a, p - a) < 0.0) inside = false;
        best = std::min(best, segment_distance2(p, a, b));
    }
    best = std::sqrt(best);
    return inside ? -best : best;
}

PlanarRadial::PlanarRadial(std::vector<Vec2> ccw_polygon) : poly_(std::move(ccw_polygon)) {
    if (poly_.size() < 3) fail(ErrorCode::Degenerate, "radial function needs a polygon");
    std::size_t start = 0;
    std::vector<double> raw(poly_.size());
    for (std::size_t i = 0; i < poly_.size(); ++i) {
        raw[i] = wrap_angle(std::atan2(poly_[i].y, poly_[i].x));
        if (raw[i] < raw[start]) start = i;
    }
    std::rotate(poly_.begin(), poly_.begin() + static_cast<std::ptrdiff_t>(start), poly_.end());
    std::rotate(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(start), raw.end());
    angles_ = std::move(raw);
    if (!std::is_sorted(angles_.begin(), angles_.end())) {
        fail(ErrorCode::InvariantViolation, "polygon is not star-shaped counterclockwise about the origin");
    }
}

std::size_t PlanarRadial::edge_at(double phi) const {
    phi = wrap_angle(phi);
    auto it = std::upper_bound(angles_.begin(), angles_.end(), phi);
    if (it == angles_.begin()) return poly_.size() - 1;
    return static_cast<std::size_t>(it - angles_.begin()) - 1;
}

double PlanarRadial::operator()(double phi) const {
    const std::size_t i = edge_at(phi);
    const Vec2 a = poly_[i];
    const Vec2 b = poly_[(i + 1) % poly_.size()];
    const Vec2 u{std::cos(phi), std::sin(phi)};
    const Vec2 ab = b - a;
    return cross(a, ab) / cross(u, ab);
}

}  // namespace wulff
