#ifndef BEAMWIDTH_GOLDEN_SECTION_HPP
#define BEAMWIDTH_GOLDEN_SECTION_HPP

#include <cmath>
#include <stdexcept>
#include <utility>

namespace beamwidth {

/// Golden-section search for the minimum of a unimodal f on [a, b].
/// Runs to an absolute interval tolerance in x; ties resolve toward the
/// left (smaller x) endpoint of the final bracket.
template <typename F>
std::pair<double, double> golden_section_minimize(F&& f, double a, double b,
                                                  double x_tolerance = 1e-10) {
    if (!(b >= a)) throw std::invalid_argument("golden_section_minimize: empty interval");
    constexpr double inv_phi = 0.6180339887498949;  // (√5 − 1)/2

    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > x_tolerance) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

/// Coarse scan that brackets the minimum of f on [a, b] before refinement;
/// prefers the leftmost minimal sample on ties.
template <typename F>
std::pair<double, double> bracketed_minimize(F&& f, double a, double b, int scan_points = 64,
                                             double x_tolerance = 1e-10) {
    if (scan_points < 3) scan_points = 3;
    const double h = (b - a) / (scan_points - 1);
    int best = 0;
    double fbest = f(a);
    for (int i = 1; i < scan_points; ++i) {
        const double fi = f(a + h * i);
        if (fi < fbest) {
            fbest = fi;
            best = i;
        }
    }
    const double lo = a + h * std::max(0, best - 1);
    const double hi = a + h * std::min(scan_points - 1, best + 1);
    auto [x, fx] = golden_section_minimize(f, lo, hi, x_tolerance);
    // endpoint samples may beat the refined interior value on a boundary minimum
    if (fbest < fx) return {a + h * best, fbest};
    return {x, fx};
}

}  // namespace beamwidth

#endif
