// analysis.hpp — derived diagnostics of the decay law: energy moments and the
// short-time coefficient, the effective decay width with its anti-Zeno
// maximum and reference crossings, the exponential-to-power-law turn-over
// time, and the late-time exponent fit.

#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "decaylab/amplitude.hpp"
#include "decaylab/constants.hpp"
#include "decaylab/root_finding.hpp"

namespace decaylab {

struct MomentsReport {
    double mean_e = 0.0;       // <E>, eV
    double mean_e2 = 0.0;      // <E^2>, eV^2
    double sigma_e = 0.0;      // energy spread, eV
    double zeno_time = 0.0;    // 1/sigma_e, 1/eV
    double zeno_time_s = 0.0;  // same in seconds
};

// First and second moments of the spectral density.  Both are computed about
// M: the central integrands put their mass on the cutoff scale instead of
// hiding it under a ~3000x cancellation of M^2-sized terms.
inline MomentsReport energy_moments(const ModelParams& p, const QuadConfig& cfg,
                                    double hbar_ev_s = PhysicalConstants{}.hbar_ev_s) {
    const SpectralGrid grid = spectral_integration_grid(p, 2, 1e-12);
    auto first = [&p](double e) { return (e - p.m) * spectral_density(e, p); };
    auto second = [&p](double e) { return (e - p.m) * (e - p.m) * spectral_density(e, p); };
    const double m1 = integrate_adaptive(first, p.e_th, grid.e_cut, cfg, grid.breakpoints).value.real();
    const double m2 = integrate_adaptive(second, p.e_th, grid.e_cut, cfg, grid.breakpoints).value.real();

    MomentsReport r;
    r.mean_e = p.m + m1;
    r.mean_e2 = m2 + 2.0 * p.m * r.mean_e - p.m * p.m;
    r.sigma_e = std::sqrt(m2 - m1 * m1);
    r.zeno_time = 1.0 / r.sigma_e;
    r.zeno_time_s = r.zeno_time * hbar_ev_s;
    return r;
}

struct ShortTimeCoefficients {
    double mean_e = 0.0;    // eV
    double variance = 0.0;  // <E^2> - <E>^2, eV^2
};

// Coefficients of A(t) = 1 - i<E>t - <E^2>t^2/2 + ..., i.e. of the quadratic
// law P(t) = 1 - (t sigma_E)^2.  Valid only while the whole spectrum is
// unresolved (cutoff*t << 1), far below the Zeno time itself.
inline ShortTimeCoefficients short_time_expansion(const ModelParams& p, const QuadConfig& cfg) {
    const MomentsReport m = energy_moments(p, cfg);
    return {m.mean_e, m.sigma_e * m.sigma_e};
}

struct WidthSample {
    double t = 0.0;
    double gamma_eff_ratio = 0.0;  // Gamma_eff(t) / Gamma
};

// Effective decay width Gamma_eff = -P'(t)/P(t) = -2 Re[A' conj(A)]/|A|^2,
// from the exact derivative of the active representation (finite differences
// of P would drown the plateau in noise).
inline WidthSample effective_width(double t, const ModelParams& p, const RegimePolicy& policy,
                                   const QuadConfig& cfg) {
    RegimePolicy quiet = policy;
    quiet.overlap_check = false;  // A and A' must come from the same representation
    const Complex a = amplitude(t, p, quiet, cfg).amplitude;
    const Complex da = amplitude_derivative(t, p, quiet, cfg).value;
    const double survival = std::norm(a);
    if (!(survival > 1e-280))
        throw std::range_error("effective_width: survival probability underflowed");
    const double gamma_eff = -2.0 * (da * std::conj(a)).real() / survival;
    return {t, gamma_eff / p.gamma};
}

struct AntiZenoScan {
    double scan_lo = 1e-6;     // 1/eV
    double scan_hi = 0.1;      // 1/eV
    int points_per_decade = 200;
};

// Global maximum of Gamma_eff/Gamma on (0, scan_hi]: log-spaced coarse scan,
// then golden-section refinement of the bracketing triple.
inline WidthSample antizeno_maximum(const ModelParams& p, const RegimePolicy& policy,
                                    const QuadConfig& cfg, const AntiZenoScan& scan = {}) {
    if (!(scan.scan_lo > 0.0 && scan.scan_lo < scan.scan_hi) || scan.points_per_decade < 2)
        throw std::invalid_argument("antizeno_maximum: bad scan window");

    const double decades = std::log10(scan.scan_hi / scan.scan_lo);
    const auto n = static_cast<std::size_t>(std::ceil(decades * scan.points_per_decade)) + 1;
    std::vector<double> ts(n);
    for (std::size_t i = 0; i < n; ++i)
        ts[i] = scan.scan_lo * std::pow(scan.scan_hi / scan.scan_lo,
                                        static_cast<double>(i) / static_cast<double>(n - 1));

    auto ratio = [&](double t) { return effective_width(t, p, policy, cfg).gamma_eff_ratio; };
    std::size_t best = 0;
    double best_ratio = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ratio(ts[i]);
        if (r > best_ratio) {
            best_ratio = r;
            best = i;
        }
    }
    const double lo = ts[best > 0 ? best - 1 : 0];
    const double hi = ts[best + 1 < n ? best + 1 : n - 1];
    auto [t_max, r_max] = golden_section_max(ratio, lo, hi, 1e-6);
    return {t_max, r_max};
}

// First time the effective width reaches the exponential rate: the boundary
// between the Zeno region and the anti-Zeno domain.
inline double zeno_antizeno_crossover(const ModelParams& p, const RegimePolicy& policy,
                                      const QuadConfig& cfg, double t_antizeno_max) {
    auto excess = [&](double t) {
        return effective_width(t, p, policy, cfg).gamma_eff_ratio - 1.0;
    };
    return bisect(excess, 1e-8, t_antizeno_max, 1e-6);
}

// Times on the descending branch (past the anti-Zeno maximum) where
// Gamma_eff/Gamma crosses the given levels; levels must exceed 1.
inline std::vector<std::pair<double, double>> width_crossings(
    std::span<const double> levels, const ModelParams& p, const RegimePolicy& policy,
    const QuadConfig& cfg, double t_start = 0.0) {
    if (t_start <= 0.0) t_start = antizeno_maximum(p, policy, cfg).t;

    auto ratio = [&](double t) { return effective_width(t, p, policy, cfg).gamma_eff_ratio; };
    std::vector<std::pair<double, double>> out;
    out.reserve(levels.size());
    for (double level : levels) {
        if (!(level > 1.0))
            throw std::invalid_argument("width_crossings: levels must exceed 1");
        double lo = t_start;
        if (!(ratio(lo) > level))
            throw BracketError("width_crossings: level not reached at the scan start");
        double hi = lo;
        int expansions = 0;
        do {
            hi *= 1.6;
            if (++expansions > 40)
                throw BracketError("width_crossings: level not bracketed on the descending branch");
        } while (ratio(hi) > level);
        auto f = [&](double t) { return ratio(t) - level; };
        out.emplace_back(level, bisect(f, lo, hi, 1e-5));
    }
    return out;
}

struct TurnoverReport {
    double t_ev_inv = 0.0;     // 1/eV
    double t_s = 0.0;          // seconds
    double in_lifetimes = 0.0; // units of tau
};

// Time at which the decaying pole term and the t^-2 background asymptote have
// equal magnitude:  |c_pole| e^{-Gamma t/2} = (chi/M^2) t^-2.  The log of the
// ratio is strictly monotone past ~4 tau, so bisection on [10, 1e4] tau is
// safe.
inline TurnoverReport turnover_time(const ModelParams& p,
                                    double hbar_ev_s = PhysicalConstants{}.hbar_ev_s) {
    const PoleData pole = build_pole_data(p);
    const double log_coef = std::log(std::abs(pole.coefficient));
    const double log_bg = std::log(p.chi / (p.m * p.m));
    auto balance = [&](double t) {
        return log_coef - 0.5 * p.gamma * t - (log_bg - 2.0 * std::log(t));
    };
    const double t = bisect(balance, 10.0 * p.tau, 1e4 * p.tau, 1e-13);
    return {t, t * hbar_ev_s, t / p.tau};
}

// Least-squares slope of log P against log t.
inline double fit_loglog_slope(std::span<const std::pair<double, double>> samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("fit_loglog_slope: need at least two samples");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [t, prob] : samples) {
        const double x = std::log(t);
        const double y = std::log(prob);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const auto n = static_cast<double>(samples.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct PowerLawFit {
    double slope = 0.0;
    bool mixed_regime = false;  // window touches the exponential side of the turn-over
};

// Late-time exponent from contour samples on a log grid over [t_lo, t_hi].
inline PowerLawFit powerlaw_exponent(double t_lo, double t_hi, int n_points,
                                     const ModelParams& p, const QuadConfig& cfg) {
    if (!(t_lo > 0.0 && t_lo < t_hi) || n_points < 2)
        throw std::invalid_argument("powerlaw_exponent: bad sample window");
    const PoleData pole = build_pole_data(p);
    std::vector<std::pair<double, double>> samples;
    samples.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double t = t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / (n_points - 1));
        samples.emplace_back(t, std::norm(amplitude_contour(t, pole, p, cfg).value));
    }
    PowerLawFit fit;
    fit.slope = fit_loglog_slope(samples);
    fit.mixed_regime = t_lo < turnover_time(p).t_ev_inv;
    return fit;
}

}  // namespace decaylab
