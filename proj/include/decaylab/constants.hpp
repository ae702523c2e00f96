// constants.hpp — physical input constants and natural-unit conversions

#pragma once

#include <stdexcept>

namespace decaylab {

inline constexpr double k_pi = 3.14159265358979323846;

// Inputs of the model: everything else is derived from these three numbers.
// Values are pinned so that all derived quantities reproduce the reference
// six-digit figures (Lambda = 5593.41 eV, M = 10.2043 eV, tau = 1.59535 ns).
struct PhysicalConstants {
    double alpha = 7.2973525693e-3;       // fine-structure constant
    double electron_mass_ev = 510998.95;  // electron rest energy, eV
    double hbar_ev_s = 6.582119569e-16;   // hbar, eV*s (t[s] = t[1/eV] * hbar)

    void validate() const {
        if (!(alpha > 7.29e-3 && alpha < 7.30e-3))
            throw std::domain_error("PhysicalConstants: alpha outside (7.29e-3, 7.30e-3)");
        if (!(electron_mass_ev > 510998.0 && electron_mass_ev < 511000.0))
            throw std::domain_error("PhysicalConstants: electron mass outside (510998, 511000) eV");
        if (!(hbar_ev_s > 6.582e-16 && hbar_ev_s < 6.583e-16))
            throw std::domain_error("PhysicalConstants: hbar outside (6.582e-16, 6.583e-16) eV*s");
    }
};

}  // namespace decaylab
