// root_finding.hpp — bisection and golden-section helpers for the analysis
// layer.  Both are deliberately derivative-free: the objective functions are
// quadrature-backed and smooth but expensive.

#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace decaylab {

struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root of f on [lo, hi]; requires a sign change on the bracket.
template <class F>
double bisect(F&& f, double lo, double hi, double rel_tol = 1e-12, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw BracketError("bisect: no sign change on the given bracket");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= rel_tol * (std::abs(lo) + std::abs(hi)) || mid == lo || mid == hi)
            return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Maximum of f on [a, b] (assumed unimodal there); returns {argmax, max}.
template <class F>
std::pair<double, double> golden_section_max(F&& f, double a, double b,
                                             double rel_tol = 1e-6, int max_iter = 200) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > rel_tol * (std::abs(a) + std::abs(b)); ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc > fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

}  // namespace decaylab
