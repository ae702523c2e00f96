// validation.hpp — the built-in self-check suite behind `decay-lab validate`:
// spectral normalization, the dispersion-relation oracle for the closed-form
// real part, method overlap, the Zeno time, the reference effective-width
// crossings, the turn-over time, and the late-time exponent.

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "decaylab/analysis.hpp"
#include "decaylab/format.hpp"

namespace decaylab {

struct CheckResult {
    std::string name;
    double expected = 0.0;
    double got = 0.0;
    double tolerance = 0.0;  // same convention as `deviation`
    double deviation = 0.0;
    bool pass = false;
};

namespace detail {

inline CheckResult make_check(std::string name, double expected, double got, double tol,
                              bool relative) {
    CheckResult c;
    c.name = std::move(name);
    c.expected = expected;
    c.got = got;
    c.tolerance = tol;
    c.deviation = relative ? std::abs(got / expected - 1.0) : std::abs(got - expected);
    c.pass = c.deviation <= tol;
    return c;
}

}  // namespace detail

// Reference values for the 2P-1S transition (natural units).
namespace reference {
inline constexpr double zeno_time = 5.45911;            // 1/eV
inline constexpr double turnover = 3.03297e8;           // 1/eV
inline constexpr double crossing_levels[3] = {2.0, 1.1, 1.01};
inline constexpr double crossing_times[3] = {0.02130, 0.06242, 0.08234};  // 1/eV
}  // namespace reference

inline std::vector<CheckResult> run_validation(const ModelParams& p,
                                               const RegimePolicy& policy = {}) {
    std::vector<CheckResult> checks;
    const QuadConfig precise = QuadConfig::precise();
    const QuadConfig amp_cfg = QuadConfig::amplitude();
    const QuadConfig width_cfg = QuadConfig::width_scan();

    {  // normalization of the spectral density
        const SpectralGrid grid = spectral_integration_grid(p, 0, 1e-14);
        auto ds = [&p](double e) { return spectral_density(e, p); };
        const double norm =
            integrate_adaptive(ds, p.e_th, grid.e_cut, precise, grid.breakpoints).value.real();
        checks.push_back(detail::make_check("spectral normalization", 1.0, norm, 1e-6, false));
    }

    {  // closed-form Re Pi against the principal-value dispersion integral
        auto g = [&p](double e) { return im_self_energy(e, p) / k_pi; };
        const double b = 1e6;
        const double hints[] = {0.37796447300922722 * p.cutoff, p.cutoff, 10.0 * p.cutoff};
        auto pv = [&](double c) {
            return integrate_pv(g, p.e_th, b, c, precise, hints).value.real();
        };
        const double pv_m = pv(p.m);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double e = 0.1 * std::pow(1e6, i / 19.0);
            const double closed = re_self_energy(e, p) - re_self_energy(p.m, p);
            const double oracle = pv(e) - pv_m;
            worst = std::max(worst, std::abs(closed / oracle - 1.0));
        }
        checks.push_back(detail::make_check("dispersion oracle (worst of 20)", 0.0, worst, 1e-6, false));
    }

    {  // Zeno time
        const MomentsReport m = energy_moments(p, precise);
        checks.push_back(detail::make_check("zeno time", reference::zeno_time, m.zeno_time, 1e-4, true));
    }

    {  // direct vs contour in the overlap window
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            const double t = policy.t_contour_min *
                             std::pow(policy.t_direct_max / policy.t_contour_min, i / 4.0);
            const Complex direct = amplitude_direct(t, p, amp_cfg).value;
            const Complex contour = amplitude_contour(t, p, amp_cfg).value;
            worst = std::max(worst, std::abs(direct - contour));
        }
        checks.push_back(detail::make_check("method overlap (worst of 5)", 0.0, worst, 1e-5, false));
    }

    {  // reference effective-width crossings
        const WidthSample peak = antizeno_maximum(p, policy, width_cfg, {1e-4, 2e-3, 60});
        const auto crossings =
            width_crossings(reference::crossing_levels, p, policy, width_cfg, peak.t);
        for (std::size_t i = 0; i < crossings.size(); ++i) {
            checks.push_back(detail::make_check(
                "width crossing at ratio " + format_number(reference::crossing_levels[i], 3),
                reference::crossing_times[i], crossings[i].second, 1e-2, true));
        }
    }

    {  // turn-over time
        const TurnoverReport to = turnover_time(p);
        checks.push_back(detail::make_check("turn-over time", reference::turnover, to.t_ev_inv, 1e-3, true));
    }

    {  // late-time exponent
        const PowerLawFit fit = powerlaw_exponent(1e3 * p.tau, 1e4 * p.tau, 25, p, amp_cfg);
        checks.push_back(detail::make_check("late-time exponent", -4.0, fit.slope, 0.01, false));
    }

    return checks;
}

}  // namespace decaylab
