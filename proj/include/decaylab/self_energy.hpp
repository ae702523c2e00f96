// self_energy.hpp — closed-form photon-loop self-energy of the 2P state and
// its analytic continuation.
//
// On the real axis above threshold the loop is
//   Im Pi(E) = pi chi Lambda x / (1+x^2)^4,        x = (E - E_th)/Lambda,
//   Re Pi(E) = chi Lambda (B(x) + C),
// where B is the closed form of the once-integrated dispersion relation and C
// is fixed by the renormalization condition Re Pi(M) = 0.  The continuation
// used by the rotated-contour amplitude keeps the same closed forms with
// complex x, drops the threshold step, and takes the principal logarithm
// (cut along x <= 0, so the lower half-plane and the negative imaginary axis
// are cut-free).  Both closed forms have poles at x = +-i.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "decaylab/constants.hpp"
#include "decaylab/model.hpp"

namespace decaylab {

// Thrown when a continued closed form is evaluated at (or numerically on top
// of) one of its poles x = +-i.
struct SingularPointError : std::domain_error {
    using std::domain_error::domain_error;
};

// Bracket of the closed-form Re Pi / (chi Lambda) before subtraction.
// Equals the principal-value dispersion transform of x/(1+x^2)^4; in
// particular B(0) = 5 pi / 32 and B(x) -> -1/(6x) as x -> infinity.
inline double self_energy_bracket(double x) {
    if (x < 0.0)
        throw std::domain_error("self_energy_bracket: x < 0 on the real branch");
    if (x == 0.0) return 15.0 * k_pi / 96.0;  // x ln x -> 0 limit
    const double x2 = x * x;
    const double q = 1.0 + x2;
    const double q2 = q * q;
    const double q4 = q2 * q2;
    return -(2.0 * x * std::log(x) + k_pi * x2) / (2.0 * q4)
           - (2.0 * x + k_pi * x2) / (4.0 * q * q2)
           - (4.0 * x + 3.0 * k_pi * x2) / (16.0 * q2)
           + (15.0 * k_pi - 16.0 * x) / (96.0 * q);
}

inline Complex self_energy_bracket(Complex x) {
    if (x.imag() == 0.0 && x.real() < 0.0)
        throw std::domain_error("self_energy_bracket: argument on the branch cut (x real, x < 0)");
    if (x == Complex(0.0, 0.0)) return Complex(15.0 * k_pi / 96.0, 0.0);
    const Complex x2 = x * x;
    const Complex q = 1.0 + x2;
    if (std::abs(q) < 1e-30)
        throw SingularPointError("self_energy_bracket: evaluation at the pole x = +-i");
    const Complex q2 = q * q;
    const Complex q4 = q2 * q2;
    return -(2.0 * x * std::log(x) + k_pi * x2) / (2.0 * q4)
           - (2.0 * x + k_pi * x2) / (4.0 * q * q2)
           - (4.0 * x + 3.0 * k_pi * x2) / (16.0 * q2)
           + (15.0 * k_pi - 16.0 * x) / (96.0 * q);
}

// Im Pi(E) on the real axis; identically zero at and below threshold.
inline double im_self_energy(double e, const ModelParams& p) {
    if (e <= p.e_th) return 0.0;
    const double x = (e - p.e_th) / p.cutoff;
    const double q = 1.0 + x * x;
    const double q2 = q * q;
    return k_pi * p.chi * p.cutoff * x / (q2 * q2);
}

// Re Pi(E) on the real axis, E >= E_th.  Zero at E = M by construction of C.
inline double re_self_energy(double e, const ModelParams& p) {
    if (e < p.e_th)
        throw std::domain_error("re_self_energy: E below threshold; use continued_* for general arguments");
    const double x = (e - p.e_th) / p.cutoff;
    return p.chi * p.cutoff * (self_energy_bracket(x) + p.c_sub);
}

// Analytic continuations of the two real-axis parts (each is Schwarz
// symmetric on its own).  The full continued self-energy through the cut is
// their combination R(z) + i I(z).
inline Complex continued_im_self_energy(Complex z, const ModelParams& p) {
    const Complex x = (z - p.e_th) / p.cutoff;
    const Complex q = 1.0 + x * x;
    if (std::abs(q) < 1e-30)
        throw SingularPointError("continued_im_self_energy: pole at x = +-i");
    const Complex q2 = q * q;
    return k_pi * p.chi * p.cutoff * x / (q2 * q2);
}

inline Complex continued_re_self_energy(Complex z, const ModelParams& p) {
    const Complex x = (z - p.e_th) / p.cutoff;
    return p.chi * p.cutoff * (self_energy_bracket(x) + p.c_sub);
}

inline Complex continued_self_energy(Complex z, const ModelParams& p) {
    return continued_re_self_energy(z, p) + Complex(0.0, 1.0) * continued_im_self_energy(z, p);
}

// Builds the full parameter set from the three physical inputs:
//   chi    = (2/pi) (2/3)^9 alpha^3
//   Lambda = (3/2) alpha m_e
//   M      = (3/8) alpha^2 m_e
//   Gamma  = 2 Im Pi(M)  (the on-shell closed form, including (1+(alpha/4)^2)^-4)
//   C      solved from Re Pi(M) = 0
inline ModelParams derive_params(const PhysicalConstants& constants = PhysicalConstants{}) {
    constants.validate();
    const double a = constants.alpha;
    ModelParams p;
    p.chi = (2.0 / k_pi) * std::pow(2.0 / 3.0, 9) * a * a * a;
    p.cutoff = 1.5 * a * constants.electron_mass_ev;
    p.e_th = 0.0;
    p.m = 0.375 * a * a * constants.electron_mass_ev;
    p.c_sub = -self_energy_bracket((p.m - p.e_th) / p.cutoff);
    p.gamma = 2.0 * im_self_energy(p.m, p);
    p.tau = 1.0 / p.gamma;
    return p;
}

}  // namespace decaylab
