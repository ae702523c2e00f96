// model.hpp — derived parameter set of the two-level + photon continuum model

#pragma once

#include <complex>

namespace decaylab {

using Complex = std::complex<double>;

// All derived constants of the 2P-1S transition, natural units (energies in
// eV, times in 1/eV). Immutable after construction; see derive_params().
struct ModelParams {
    double chi = 0.0;     // dimensionless coupling
    double cutoff = 0.0;  // form-factor scale Lambda, eV
    double e_th = 0.0;    // threshold energy (fixed to 0)
    double m = 0.0;       // 2P level energy, eV
    double gamma = 0.0;   // on-shell decay width, eV
    double tau = 0.0;     // lifetime 1/gamma, 1/eV
    double c_sub = 0.0;   // dimensionless subtraction constant of Re Pi
};

}  // namespace decaylab
