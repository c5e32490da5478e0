#include "wulff/width_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "wulff/numeric.hpp"
#include "wulff/planar.hpp"

namespace wulff {

namespace {

constexpr std::size_t kEdgeSamples = 16;

// Parametrized boundary: polygons by (edge + t), sampled bodies by fan angle.
struct Boundary {
    const SphericalBody& body;

    std::size_t count() const {
        if (const auto* p = std::get_if<SphericalPolygon>(&body)) return p->size() * kEdgeSamples;
        return std::get<SampledSphericalBody>(body).size();
    }
    double step() const {
        if (std::holds_alternative<SphericalPolygon>(body)) return 1.0 / static_cast<double>(kEdgeSamples);
        return std::get<SampledSphericalBody>(body).step();
    }
    double param(std::size_t k) const { return step() * static_cast<double>(k); }
    Vec3 at(double s) const {
        if (const auto* p = std::get_if<SphericalPolygon>(&body)) {
            const double n = static_cast<double>(p->size());
            s = std::fmod(s, n);
            if (s < 0.0) s += n;
            const auto i = static_cast<std::size_t>(s);
            const double t = s - static_cast<double>(i);
            return normalized(p->vertex(i) * (1.0 - t) + p->vertex(i + 1) * t);
        }
        return std::get<SampledSphericalBody>(body).boundary_at(s);
    }
};

// Indices of the cyclic local extrema of v, best first, at most `limit`.
std::vector<std::size_t> local_extrema(const std::vector<double>& v, bool maximize, std::size_t limit) {
    const std::size_t n = v.size();
    auto better = [&](double a, double b) { return maximize ? a > b : a < b; };
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
        const double prev = v[(i + n - 1) % n];
        const double next = v[(i + 1) % n];
        if (!better(prev, v[i]) && !better(next, v[i])) idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return better(v[a], v[b]); });
    if (idx.size() > limit) idx.resize(limit);
    return idx;
}

// Largest distance from q to a sampled body: mesh seeds, then golden refinement
// of the best few local maxima (long polyline edges make near ties common).
std::pair<double, Vec3> farthest_sampled(const SampledSphericalBody& s, const Vec3& q) {
    std::vector<double> d(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) d[k] = dot(q, s.sample(k));
    const double h = s.step();
    double best_dot = std::numeric_limits<double>::infinity();
    Vec3 p;
    for (std::size_t k : local_extrema(d, false, 3)) {
        if (d[k] < best_dot) {
            best_dot = d[k];
            p = s.sample(k);
        }
        const double phi0 = s.fan_angle(k);
        const Extremum e = golden_min([&](double phi) { return dot(q, s.boundary_at(phi)); }, phi0 - h, phi0 + h);
        if (e.value < best_dot) {
            best_dot = e.value;
            p = s.boundary_at(e.arg);
        }
    }
    return {distance(q, p), p};
}

SphericalBody polar_of(const SphericalBody& body) { return polar(body, kDefaultSamples); }

}  // namespace

std::pair<double, Vec3> farthest_point(const SphericalBody& body, const Vec3& q) {
    if (const auto* p = std::get_if<SphericalPolygon>(&body)) {
        double best = -1.0;
        Vec3 arg = p->vertex(0);
        for (std::size_t i = 0; i < p->size(); ++i) {
            const ArcExtremum e = arc_min_dot(q, p->vertex(i), p->vertex(i + 1));
            const double d = distance(q, e.point);
            if (d > best) {
                best = d;
                arg = e.point;
            }
        }
        return {best, arg};
    }
    return farthest_sampled(std::get<SampledSphericalBody>(body), q);
}

double width_wrt(const SphericalBody& body, const SphericalBody& polar, const Hemisphere& h) {
    const Vec3 c = h.center.vec();
    // H(c) supports the body iff the body reaches, but does not cross, its boundary.
    const double support = std::cos(farthest_point(body, c).first);
    if (std::abs(support) > kSupportTol) {
        fail(ErrorCode::NotSupporting, "hemisphere does not support the body");
    }
    return kPi - farthest_point(polar, c).first;
}

double width_wrt(const SphericalBody& body, const Hemisphere& h) { return width_wrt(body, polar_of(body), h); }

namespace {

// Farthest distance from each mesh point of the boundary to the mesh of the
// same boundary; coarse, used only to pick candidates for refinement.
std::vector<double> mesh_reach(const std::vector<Vec3>& pts, std::vector<std::size_t>* partner = nullptr) {
    std::vector<double> out(pts.size());
    if (partner) partner->assign(pts.size(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double m = 2.0;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            const double d = dot(pts[i], pts[j]);
            if (d < m) {
                m = d;
                if (partner) (*partner)[i] = j;
            }
        }
        out[i] = clamped_acos(m);
    }
    return out;
}

constexpr std::size_t kCandidates = 16;
constexpr std::size_t kRefined = 3;

// Refines an extremum of the exact farthest distance around mesh index k.
Extremum refine_reach(const SphericalBody& body, const Boundary& b, std::size_t k, bool maximize) {
    auto reach = [&](double s) { return farthest_point(body, b.at(s)).first; };
    const double s0 = b.param(k);
    const double at = reach(s0);
    const Extremum e = maximize ? golden_max(reach, s0 - b.step(), s0 + b.step())
                                : golden_min(reach, s0 - b.step(), s0 + b.step());
    const bool better = maximize ? e.value > at : e.value < at;
    return better ? e : Extremum{s0, at};
}

// Best extremum of the exact reach over the coarse local extrema: every
// candidate is evaluated exactly at its mesh point, the best few are refined.
Extremum best_reach(const SphericalBody& body, const Boundary& b, const std::vector<double>& coarse, bool maximize) {
    auto reach = [&](std::size_t k) { return farthest_point(body, b.at(b.param(k))).first; };
    std::vector<std::pair<double, std::size_t>> exact;
    for (std::size_t k : local_extrema(coarse, maximize, kCandidates)) exact.emplace_back(reach(k), k);
    std::sort(exact.begin(), exact.end(), [&](const auto& x, const auto& y) {
        return maximize ? x.first > y.first : x.first < y.first;
    });
    if (exact.size() > kRefined) exact.resize(kRefined);
    Extremum best{0.0, maximize ? -1.0 : std::numeric_limits<double>::infinity()};
    for (const auto& [value, k] : exact) {
        const Extremum e = refine_reach(body, b, k, maximize);
        if (maximize ? e.value > best.value : e.value < best.value) best = e;
    }
    return best;
}

std::vector<Vec3> boundary_mesh(const Boundary& b) {
    std::vector<Vec3> pts;
    pts.reserve(b.count());
    for (std::size_t k = 0; k < b.count(); ++k) pts.push_back(b.at(b.param(k)));
    return pts;
}

}  // namespace

double thickness(const SphericalBody& body) {
    const SphericalBody pol = polar_of(body);
    const Boundary b{pol};
    // Width at the supporting center P is pi - max_Q |PQ| over the polar
    // boundary; the thickness is the smallest of these.
    const auto coarse = mesh_reach(boundary_mesh(b));
    return kPi - best_reach(pol, b, coarse, true).value;
}

DiameterReport diameter(const SphericalBody& body) {
    DiameterReport r;
    Vec3 bp, bq;
    double best = -1.0;
    auto consider = [&](const Vec3& p, const Vec3& q) {
        const double d = distance(p, q);
        if (d > best) {
            best = d;
            bp = p;
            bq = q;
        }
    };
    if (const auto* poly = std::get_if<SphericalPolygon>(&body)) {
        const std::size_t n = poly->size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) consider(poly->vertex(i), poly->vertex(j));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const ArcExtremum e = arc_min_dot(poly->vertex(i), poly->vertex(j), poly->vertex(j + 1));
                consider(poly->vertex(i), e.point);
            }
        }
        // Edge against edge: maximize over one edge the closed-form farthest
        // point on the other.
        for (std::size_t i = 0; i < n; ++i) {
            const Vec3& a = poly->vertex(i);
            const Vec3& b = poly->vertex(i + 1);
            auto on_edge = [&](double t) { return normalized(a * (1.0 - t) + b * t); };
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const Vec3& c = poly->vertex(j);
                const Vec3& d = poly->vertex(j + 1);
                auto reach = [&](double t) { return -arc_min_dot(on_edge(t), c, d).value; };
                double t0 = 0.0, v0 = -2.0;
                for (std::size_t k = 0; k <= kEdgeSamples; ++k) {
                    const double t = static_cast<double>(k) / static_cast<double>(kEdgeSamples);
                    const double v = reach(t);
                    if (v > v0) {
                        v0 = v;
                        t0 = t;
                    }
                }
                const double step = 1.0 / static_cast<double>(kEdgeSamples);
                const Extremum e = golden_max(reach, std::max(0.0, t0 - step), std::min(1.0, t0 + step));
                const Vec3 p = on_edge(e.arg);
                consider(p, arc_min_dot(p, c, d).point);
            }
        }
    } else {
        const auto& s = std::get<SampledSphericalBody>(body);
        std::vector<std::size_t> partner;
        const auto coarse = mesh_reach(s.boundary(), &partner);
        const double h = s.step();
        std::vector<std::pair<double, std::size_t>> exact;
        for (std::size_t i : local_extrema(coarse, true, kCandidates))
            exact.emplace_back(farthest_point(body, s.sample(i)).first, i);
        std::sort(exact.begin(), exact.end(), std::greater<>());
        if (exact.size() > kRefined) exact.resize(kRefined);
        for (const auto& [value, i] : exact) {
            consider(s.sample(i), s.sample(partner[i]));
            // coordinate ascent on the pair of fan angles
            double phi = s.fan_angle(i);
            double psi = s.fan_angle(partner[i]);
            for (int iter = 0; iter < 32; ++iter) {
                const Vec3 q = s.boundary_at(psi);
                const double nphi =
                    golden_min([&](double t) { return dot(s.boundary_at(t), q); }, phi - 2 * h, phi + 2 * h).arg;
                const Vec3 p = s.boundary_at(nphi);
                const double npsi =
                    golden_min([&](double t) { return dot(p, s.boundary_at(t)); }, psi - 2 * h, psi + 2 * h).arg;
                const bool settled = std::abs(nphi - phi) < 1e-13 && std::abs(npsi - psi) < 1e-13;
                phi = nphi;
                psi = npsi;
                consider(p, s.boundary_at(psi));
                if (settled) break;
            }
        }
    }
    r.diameter = best;
    r.witness_p = SphericalPoint(bp);
    r.witness_q = SphericalPoint(bq);
    r.diameter = distance(r.witness_p, r.witness_q);
    return r;
}

WidthReport is_constant_width(const SphericalBody& body, double tol) {
    const SphericalBody pol = polar_of(body);
    const Boundary b{pol};
    const auto coarse = mesh_reach(boundary_mesh(b));
    // widest at the smallest reach, narrowest at the largest
    const Extremum wide = best_reach(pol, b, coarse, false);
    const Extremum narrow = best_reach(pol, b, coarse, true);
    WidthReport r;
    r.min_width = kPi - narrow.value;
    r.max_width = kPi - wide.value;
    r.argmin_center = SphericalPoint(b.at(narrow.arg));
    r.argmax_center = SphericalPoint(b.at(wide.arg));
    r.constant = r.max_width - r.min_width <= tol;
    r.delta = 0.5 * (r.min_width + r.max_width);
    return r;
}

DiameterReport is_constant_diameter(const SphericalBody& body, double tol) {
    DiameterReport r = diameter(body);
    const Boundary b{body};
    const auto coarse = mesh_reach(boundary_mesh(b));
    const Extremum e = best_reach(body, b, coarse, false);
    r.min_farthest = e.value;
    r.worst_point = SphericalPoint(b.at(e.arg));
    r.constant = r.min_farthest >= r.diameter - tol;
    return r;
}

double hausdorff_planar(const PlanarConvexBody& a, const PlanarConvexBody& b) {
    // Distance to a convex set is convex, so each directed part peaks at a vertex.
    auto directed = [](const PlanarConvexBody& x, const PlanarConvexBody& y) {
        double h = 0.0;
        for (const Vec2& v : x.vertices()) h = std::max(h, convex_signed_distance(y.vertices(), v));
        return h;
    };
    return std::max(directed(a, b), directed(b, a));
}

double hausdorff_spherical(const SphericalBody& a, const SphericalBody& b) {
    auto directed = [](const SphericalBody& x, const SphericalBody& y) {
        const Boundary bx{x};
        auto excess = [&](double s) { return std::max(0.0, signed_boundary_distance(y, bx.at(s))); };
        std::size_t best = 0;
        double h = -1.0;
        for (std::size_t k = 0; k < bx.count(); ++k) {
            const double e = excess(bx.param(k));
            if (e > h) {
                h = e;
                best = k;
            }
        }
        if (h <= 0.0) return 0.0;
        const double s0 = bx.param(best);
        return std::max(h, golden_max(excess, s0 - bx.step(), s0 + bx.step()).value);
    };
    return std::max(directed(a, b), directed(b, a));
}

CheckReport diameter_support_check(const SphericalBody& body, double tol) {
    CheckReport r;
    r.name = "diameter_support";
    r.trials = 1;
    const DiameterReport d = diameter(body);
    const Vec3 p = d.witness_p.vec();
    const Vec3 q = d.witness_q.vec();
    const Vec3 k = blow_up(q, p);
    const double reach = std::cos(farthest_point(body, k).first);
    bool ok = r.add("containment", std::max(0.0, -reach), tol);
    ok = r.add("touching", std::abs(dot(k, p)), tol) && ok;
    ok = r.add("contains_q", std::max(0.0, -dot(k, q)), tol) && ok;
    r.witnesses = {d.witness_p, d.witness_q, SphericalPoint(k)};
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    return r;
}

}  // namespace wulff
