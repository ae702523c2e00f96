// spectral.hpp — energy distribution of the unstable 2P state and the
// integration grids adapted to its extreme scale separation.
//
// The distribution is a resonance of relative width Gamma/M ~ 4e-8 sitting on
// a form-factor tail that extends to the Lambda scale (Lambda/M ~ 550) and
// falls off as chi Lambda^8 E^-9.  Any quadrature that is not told about
// these scales will miss the peak entirely, so spectral_integration_grid()
// publishes the cutoff and hint breakpoints every integral in this library
// uses.

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "decaylab/self_energy.hpp"

namespace decaylab {

// d_S(E) = (1/pi) Im Pi / ((E - M + Re Pi)^2 + (Im Pi)^2), zero at and below
// threshold; nonnegative and normalized to unity over (E_th, infinity).
inline double spectral_density(double e, const ModelParams& p) {
    if (e <= p.e_th) return 0.0;
    const double im = im_self_energy(e, p);
    const double re = re_self_energy(e, p);
    const double shifted = e - p.m + re;
    return im / k_pi / (shifted * shifted + im * im);
}

// The same algebraic formula with the continued loop parts. Schwarz
// symmetric; behaves as -i chi y / M^2 on the negative imaginary axis for
// small y and decays as |z|^-9 far beyond the cutoff.
inline Complex spectral_density_continued(Complex z, const ModelParams& p) {
    const Complex im = continued_im_self_energy(z, p);
    const Complex re = continued_re_self_energy(z, p);
    const Complex shifted = z - p.m + re;
    return im / k_pi / (shifted * shifted + im * im);
}

// Smallest cutoff E_c such that the discarded tail of E^moment * d_S(E)
// beyond E_c is below eps_tail.  Uses d_S(E) <= 2 chi Lambda^8 E^-9 (the
// factor 2 covers the subleading corrections for E >= 35 eV).
inline double tail_cutoff(const ModelParams& p, int moment, double eps_tail) {
    const double inv_power = 8.0 - static_cast<double>(moment);
    const double bound = 2.0 * p.chi * std::pow(p.cutoff, 8);
    const double ec = std::pow(bound / (inv_power * eps_tail), 1.0 / inv_power);
    return std::max(ec, 1000.0);
}

struct SpectralGrid {
    double e_cut = 0.0;
    std::vector<double> breakpoints;  // strictly inside (E_th, e_cut), sorted
};

// Peak window half width in units of Gamma and the cutoff multiple seeded
// into every spectral integral.
inline constexpr double k_peak_window_widths = 1e4;
inline constexpr double k_cutoff_panel_multiple = 10.0;

inline SpectralGrid spectral_integration_grid(const ModelParams& p, int moment, double eps_tail) {
    SpectralGrid grid;
    grid.e_cut = tail_cutoff(p, moment, eps_tail);
    const double w = k_peak_window_widths * p.gamma;
    // 1/sqrt(7) is where Im Pi peaks on the cutoff scale.
    const double im_peak = 0.37796447300922722 * p.cutoff;
    const double hints[] = {
        p.m - w,        p.m - 1e3 * p.gamma, p.m - 10.0 * p.gamma,
        p.m + 10.0 * p.gamma, p.m + 1e3 * p.gamma, p.m + w,
        im_peak,        p.cutoff,            k_cutoff_panel_multiple * p.cutoff};
    for (double h : hints)
        if (h > p.e_th && h < grid.e_cut) grid.breakpoints.push_back(h);
    std::sort(grid.breakpoints.begin(), grid.breakpoints.end());
    return grid;
}

}  // namespace decaylab
