#pragma once

#include <cmath>
#include <utility>

#include "wulff/vec.hpp"

namespace wulff {

struct Extremum {
    double arg = 0.0;
    double value = 0.0;
};

/// Golden-section search for the maximum of f on [lo, hi]. The endpoints are
/// compared as well, so kinks at the bracket ends are not lost.
template <class F>
Extremum golden_max(F&& f, double lo, double hi, int max_iter = 64, double tol = 1e-12) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    Extremum best = fc >= fd ? Extremum{c, fc} : Extremum{d, fd};
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo > best.value) best = {lo, flo};
    if (fhi > best.value) best = {hi, fhi};
    return best;
}

template <class F>
Extremum golden_min(F&& f, double lo, double hi, int max_iter = 64, double tol = 1e-12) {
    Extremum e = golden_max([&](double t) { return -f(t); }, lo, hi, max_iter, tol);
    e.value = -e.value;
    return e;
}

/// Minimum of A cos t + B sin t over t in [0, len] (len < 2pi), in closed form:
/// the sinusoid R cos(t - phase) bottoms out at phase + pi.
inline Extremum sinusoid_min(double a, double b, double len) {
    const double va = a;
    const double vb = a * std::cos(len) + b * std::sin(len);
    Extremum best = va <= vb ? Extremum{0.0, va} : Extremum{len, vb};
    const double r = std::hypot(a, b);
    if (r > 0.0) {
        double trough = std::atan2(b, a) + kPi;
        trough = std::fmod(trough, kTwoPi);
        if (trough < 0.0) trough += kTwoPi;
        if (trough <= len && -r < best.value) best = {trough, -r};
    }
    return best;
}

inline double wrap_angle(double phi) {
    phi = std::fmod(phi, kTwoPi);
    return phi < 0.0 ? phi + kTwoPi : phi;
}

}  // namespace wulff
