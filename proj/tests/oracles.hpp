#pragma once

// Brute-force references used only by the tests.

#include <cmath>
#include <random>
#include <vector>

#include "wulff/vec.hpp"

namespace oracle {

using wulff::Vec3;

// Near-uniform points on the sphere (Fibonacci lattice).
inline std::vector<Vec3> fibonacci_sphere(std::size_t n) {
    std::vector<Vec3> out;
    out.reserve(n);
    const double golden = wulff::kPi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
        const double r = std::sqrt(1.0 - z * z);
        const double a = golden * static_cast<double>(i);
        out.push_back({r * std::cos(a), r * std::sin(a), z});
    }
    return out;
}

inline double sphere_dist(const Vec3& a, const Vec3& b) {
    return std::acos(std::clamp(wulff::dot(a, b), -1.0, 1.0));
}

// Points on the great arc [a, b], endpoints included.
inline std::vector<Vec3> arc_points(const Vec3& a, const Vec3& b, int n) {
    std::vector<Vec3> out;
    for (int j = 0; j <= n; ++j) {
        const double t = static_cast<double>(j) / n;
        out.push_back(wulff::normalized(a * (1 - t) + b * t));
    }
    return out;
}

inline std::vector<Vec3> polygon_boundary(const std::vector<Vec3>& verts, int per_edge) {
    std::vector<Vec3> out;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        auto pts = arc_points(verts[i], verts[(i + 1) % verts.size()], per_edge);
        out.insert(out.end(), pts.begin(), pts.end() - 1);
    }
    return out;
}

// Directed spherical Hausdorff between finite point sets.
inline double directed_hausdorff(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
    double h = 0.0;
    for (const Vec3& p : a) {
        double best = 1e300;
        for (const Vec3& q : b) best = std::min(best, sphere_dist(p, q));
        h = std::max(h, best);
    }
    return h;
}

inline double max_pairwise(const std::vector<Vec3>& a) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) d = std::max(d, sphere_dist(a[i], a[j]));
    return d;
}

// Cap boundary of radius r around c.
inline std::vector<Vec3> cap_boundary(const Vec3& c, double r, int n) {
    Vec3 e1 = std::abs(c.x) < 0.9 ? wulff::cross(c, Vec3{1, 0, 0}) : wulff::cross(c, Vec3{0, 1, 0});
    e1 = wulff::normalized(e1);
    const Vec3 e2 = wulff::cross(c, e1);
    std::vector<Vec3> out;
    for (int k = 0; k < n; ++k) {
        const double t = 2 * wulff::kPi * k / n;
        out.push_back(c * std::cos(r) + (e1 * std::cos(t) + e2 * std::sin(t)) * std::sin(r));
    }
    return out;
}

}  // namespace oracle
