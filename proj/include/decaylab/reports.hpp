// reports.hpp — the data products behind the CLI: sample grids, CSV emission
// for the spectral function / survival probability / effective width, and the
// text tables for constants, Zeno diagnostics, turn-over and the late-time
// exponent.  All numeric fields go through format_number(), so output is
// byte-identical across runs.

#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "decaylab/analysis.hpp"
#include "decaylab/format.hpp"
#include "decaylab/validation.hpp"

namespace decaylab {

enum class GridSpacing { linear, log };

inline std::vector<double> make_grid(double lo, double hi, int points, GridSpacing spacing) {
    if (!(lo < hi)) throw std::invalid_argument("make_grid: need min < max");
    if (points < 2) throw std::invalid_argument("make_grid: need at least 2 points");
    if (spacing == GridSpacing::log && !(lo > 0.0))
        throw std::invalid_argument("make_grid: log spacing requires min > 0");
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double s = static_cast<double>(i) / (points - 1);
        grid[static_cast<std::size_t>(i)] =
            spacing == GridSpacing::linear ? lo + (hi - lo) * s : lo * std::pow(hi / lo, s);
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

enum class MethodChoice { automatic, direct, contour, longtime };

struct RunConfig {
    double range_min = 0.0;
    double range_max = 0.0;
    int points = 0;
    GridSpacing spacing = GridSpacing::linear;
    MethodChoice method = MethodChoice::automatic;
};

// --- CSV emitters -----------------------------------------------------------

inline void emit_spectral(std::ostream& os, const ModelParams& p, const RunConfig& run) {
    os << "E_eV,d_S_per_eV\n";
    for (double e : make_grid(run.range_min, run.range_max, run.points, run.spacing))
        os << format_number(e) << ',' << format_number(spectral_density(e, p)) << '\n';
}

inline void emit_survival(std::ostream& os, const ModelParams& p, const RegimePolicy& policy,
                          const QuadConfig& cfg, const RunConfig& run,
                          double hbar_ev_s = PhysicalConstants{}.hbar_ev_s) {
    os << "t_eVinv,t_s,ReA,ImA,P,method,err\n";
    const PoleData pole = build_pole_data(p);
    for (double t : make_grid(run.range_min, run.range_max, run.points, run.spacing)) {
        AmplitudeSample s;
        switch (run.method) {
            case MethodChoice::automatic:
                s = amplitude(t, p, policy, cfg);
                break;
            case MethodChoice::direct: {
                const QuadResult r = amplitude_direct(t, p, cfg);
                s = {t, r.value, std::norm(r.value), AmplitudeMethod::direct, r.error_estimate};
                break;
            }
            case MethodChoice::contour: {
                const QuadResult r = amplitude_contour(t, pole, p, cfg);
                s = {t, r.value, std::norm(r.value), AmplitudeMethod::contour, r.error_estimate};
                break;
            }
            case MethodChoice::longtime: {
                const Complex a = amplitude_longtime(t, pole, p);
                s = {t, a, std::norm(a), AmplitudeMethod::longtime, 0.0};
                break;
            }
        }
        os << format_number(t) << ',' << format_number(t * hbar_ev_s) << ','
           << format_number(s.amplitude.real()) << ',' << format_number(s.amplitude.imag()) << ','
           << format_number(s.survival) << ',' << to_string(s.method) << ','
           << format_number(s.error_estimate) << '\n';
    }
}

inline void emit_width(std::ostream& os, const ModelParams& p, const RegimePolicy& policy,
                       const QuadConfig& cfg, const RunConfig& run,
                       double hbar_ev_s = PhysicalConstants{}.hbar_ev_s) {
    if (!(run.range_min > 0.0))
        throw std::invalid_argument("emit_width: range must start above t = 0");
    os << "t_eVinv,t_s,gamma_eff_over_gamma\n";
    for (double t : make_grid(run.range_min, run.range_max, run.points, run.spacing)) {
        const WidthSample w = effective_width(t, p, policy, cfg);
        os << format_number(t) << ',' << format_number(t * hbar_ev_s) << ','
           << format_number(w.gamma_eff_ratio) << '\n';
    }
}

// --- text reports ------------------------------------------------------------

inline void print_constants(std::ostream& os, const PhysicalConstants& constants,
                            const ModelParams& p) {
    const MomentsReport moments = energy_moments(p, QuadConfig::precise(), constants.hbar_ev_s);
    const PoleData pole = build_pole_data(p);
    auto line = [&os](const char* name, double v) {
        os << name << " = " << format_number(v, 6) << '\n';
    };
    line("alpha", constants.alpha);
    line("m_e_eV", constants.electron_mass_ev);
    line("hbar_eV_s", constants.hbar_ev_s);
    line("chi", p.chi);
    line("Lambda_eV", p.cutoff);
    line("E_th_eV", p.e_th);
    line("M_eV", p.m);
    line("Gamma_eV", p.gamma);
    line("tau_eVinv", p.tau);
    line("tau_s", p.tau * constants.hbar_ev_s);
    line("C", p.c_sub);
    line("tau_Z_eVinv", moments.zeno_time);
    line("tau_Z_s", moments.zeno_time_s);
    line("z_pole_re_eV", pole.z_pole.real());
    line("z_pole_im_eV", pole.z_pole.imag());
    line("pole_coefficient_abs", std::abs(pole.coefficient));
}

inline void print_zeno(std::ostream& os, const ModelParams& p, const RegimePolicy& policy,
                       double hbar_ev_s = PhysicalConstants{}.hbar_ev_s) {
    const MomentsReport m = energy_moments(p, QuadConfig::precise(), hbar_ev_s);
    const QuadConfig width_cfg = QuadConfig::width_scan();
    auto line = [&os](const char* name, double v) {
        os << name << " = " << format_number(v) << '\n';
    };
    line("mean_E_eV", m.mean_e);
    line("mean_E2_eV2", m.mean_e2);
    line("sigma_E_eV", m.sigma_e);
    line("tau_Z_eVinv", m.zeno_time);
    line("tau_Z_s", m.zeno_time_s);

    const WidthSample peak = antizeno_maximum(p, policy, width_cfg);
    line("antizeno_max_t_eVinv", peak.t);
    line("antizeno_max_t_s", peak.t * hbar_ev_s);
    line("antizeno_max_ratio", peak.gamma_eff_ratio);

    const double crossover = zeno_antizeno_crossover(p, policy, width_cfg, peak.t);
    line("zeno_crossover_t_eVinv", crossover);
    line("zeno_crossover_t_s", crossover * hbar_ev_s);

    os << "ratio,t_eVinv,t_s\n";
    for (const auto& [level, t] :
         width_crossings(reference::crossing_levels, p, policy, width_cfg, peak.t))
        os << format_number(level) << ',' << format_number(t) << ','
           << format_number(t * hbar_ev_s) << '\n';
}

inline void print_turnover(std::ostream& os, const ModelParams& p,
                           double hbar_ev_s = PhysicalConstants{}.hbar_ev_s) {
    const TurnoverReport to = turnover_time(p, hbar_ev_s);
    os << "t_turnover_eVinv = " << format_number(to.t_ev_inv) << '\n'
       << "t_turnover_s = " << format_number(to.t_s) << '\n'
       << "t_turnover_over_tau = " << format_number(to.in_lifetimes) << '\n';
}

inline void print_powerlaw(std::ostream& os, const ModelParams& p, const QuadConfig& cfg,
                           double t_lo, double t_hi, int points) {
    const PowerLawFit fit = powerlaw_exponent(t_lo, t_hi, points, p, cfg);
    os << "window_t_eVinv = [" << format_number(t_lo) << ", " << format_number(t_hi) << "]\n"
       << "points = " << points << '\n'
       << "slope = " << format_number(fit.slope) << '\n'
       << "mixed_regime = " << (fit.mixed_regime ? "yes" : "no") << '\n';
}

// Prints one pass/fail line per check; returns true when everything passed.
inline bool print_validation(std::ostream& os, const std::vector<CheckResult>& checks) {
    bool all = true;
    for (const CheckResult& c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": expected " << format_number(c.expected)
           << ", got " << format_number(c.got) << ", deviation " << format_number(c.deviation, 3)
           << " (tolerance " << format_number(c.tolerance, 3) << ")\n";
        all = all && c.pass;
    }
    os << (all ? "all checks passed\n" : "validation FAILED\n");
    return all;
}

}  // namespace decaylab
