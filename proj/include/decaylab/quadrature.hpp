// quadrature.hpp — adaptive panel integration used by every computation in
// the library: plain adaptive panels, principal-value integrals, oscillatory
// integrals with an e^{-iEt} kernel, and exp-weighted semi-infinite
// integrals.
//
// Each panel carries a Gauss(7)/Kronrod(15) embedded pair; the worst panel is
// bisected until the summed error estimate meets max(abs_tol, rel_tol*|I|).
// Oscillatory integrals additionally cap the initial panel width at one
// eighth of the kernel period so the embedded error estimate stays honest.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "decaylab/model.hpp"

namespace decaylab {

// Raised when a forced direct Fourier evaluation would need more panels than
// the configured budget; callers fall back to the contour representation.
struct OscillationBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadConfig {
    double abs_tol = 1e-10;        // absolute tolerance on the integral
    double rel_tol = 1e-9;         // relative tolerance on the integral
    std::size_t max_panels = 200000;
    double min_panel_width = 0.0;  // 0 = limited by double spacing only

    void validate() const {
        if (!(abs_tol > 0.0) && !(rel_tol > 0.0))
            throw std::invalid_argument("QuadConfig: need abs_tol > 0 or rel_tol > 0");
        if (max_panels < 16)
            throw std::invalid_argument("QuadConfig: max_panels must be >= 16");
    }

    // Constants, moments, dispersion integrals.
    static QuadConfig precise() { return {1e-13, 1e-9, 400000, 0.0}; }
    // Survival-amplitude samples.
    static QuadConfig amplitude() { return {1e-8, 1e-7, 3000000, 0.0}; }
    // Effective-width work: the decay rate is a ~1e-7 relative difference of
    // O(10) quantities, so the underlying integrals must be near exact.
    static QuadConfig width_scan() { return {1e-11, 1e-12, 4000000, 0.0}; }
};

struct QuadResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    std::size_t panels_used = 0;
    bool converged = false;
};

namespace detail {

inline constexpr double kx_gk15[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kw_k15[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double kw_g7[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct PanelEval {
    Complex value{0.0, 0.0};
    double error = 0.0;
};

template <class F>
PanelEval gk15(F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double center = 0.5 * (a + b);

    const Complex fc = f(center);
    Complex fv1[7], fv2[7];
    Complex resk = kw_k15[7] * fc;
    Complex resg = kw_g7[3] * fc;
    double resabs = kw_k15[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kx_gk15[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        const Complex fsum = fv1[j] + fv2[j];
        resk += kw_k15[j] * fsum;
        resabs += kw_k15[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) resg += kw_g7[j / 2] * fsum;
    }
    const Complex reskh = resk * 0.5;
    double resasc = kw_k15[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kw_k15[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    resabs *= half;
    resasc *= half;

    double err = std::abs(resk - resg) * half;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(err, 50.0 * eps * resabs);
    return {resk * half, err};
}

struct Panel {
    double a = 0.0, b = 0.0;
    Complex value{0.0, 0.0};
    double error = 0.0;
    bool active = false;
    bool splittable = false;
};

struct KahanSum {
    double sum = 0.0, carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Shared worst-first refinement over an initial node partition.
template <class F>
QuadResult adaptive_on_nodes(F&& f, const std::vector<double>& nodes, const QuadConfig& cfg) {
    std::vector<Panel> arena;
    arena.reserve(nodes.size() + 128);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        auto pe = gk15(f, nodes[i], nodes[i + 1]);
        arena.push_back({nodes[i], nodes[i + 1], pe.value, pe.error, true, true});
    }

    auto resum = [&arena](Complex& value, double& error) {
        KahanSum re, im, er;
        for (const Panel& p : arena) {
            if (!p.active) continue;
            re.add(p.value.real());
            im.add(p.value.imag());
            er.add(p.error);
        }
        value = Complex(re.sum, im.sum);
        error = er.sum;
    };

    Complex total;
    double total_err = 0.0;
    resum(total, total_err);
    auto tolerance = [&cfg](double magnitude) {
        return std::max(cfg.abs_tol, cfg.rel_tol * magnitude);
    };

    std::size_t active_count = arena.size();
    if (total_err > tolerance(std::abs(total))) {
        using Entry = std::pair<double, std::size_t>;
        std::priority_queue<Entry> queue;
        for (std::size_t i = 0; i < arena.size(); ++i)
            queue.push({arena[i].error, i});

        constexpr double eps = std::numeric_limits<double>::epsilon();
        std::size_t since_resum = 0;
        while (total_err > tolerance(std::abs(total)) && arena.size() < cfg.max_panels) {
            std::size_t idx = arena.size();
            while (!queue.empty()) {
                auto [err, i] = queue.top();
                queue.pop();
                if (arena[i].active && arena[i].splittable) {
                    idx = i;
                    break;
                }
            }
            if (idx == arena.size()) break;  // nothing left to split

            Panel& parent = arena[idx];
            const double width = parent.b - parent.a;
            const double floor_width =
                std::max(cfg.min_panel_width,
                         32.0 * eps * (std::abs(parent.a) + std::abs(parent.b)));
            if (width <= floor_width) {
                parent.splittable = false;
                continue;
            }
            const double mid = 0.5 * (parent.a + parent.b);
            auto left = gk15(f, parent.a, mid);
            auto right = gk15(f, mid, parent.b);
            total += left.value + right.value - parent.value;
            total_err += left.error + right.error - parent.error;
            parent.active = false;
            arena.push_back({parent.a, mid, left.value, left.error, true, true});
            arena.push_back({mid, parent.b, right.value, right.error, true, true});
            queue.push({left.error, arena.size() - 2});
            queue.push({right.error, arena.size() - 1});
            ++active_count;

            if (++since_resum == 2048) {  // cancel incremental drift
                resum(total, total_err);
                since_resum = 0;
            }
        }
    }

    QuadResult out;
    resum(out.value, out.error_estimate);
    out.panels_used = active_count;
    out.converged = out.error_estimate <= tolerance(std::abs(out.value));
    return out;
}

inline std::vector<double> make_nodes(double a, double b, std::span<const double> breakpoints) {
    std::vector<double> nodes;
    nodes.reserve(breakpoints.size() + 2);
    nodes.push_back(a);
    for (double bp : breakpoints)
        if (bp > a && bp < b) nodes.push_back(bp);
    nodes.push_back(b);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

}  // namespace detail

// Integral of f over [a, b] with optional interior breakpoints seeding the
// initial panels.  f may return double or std::complex<double>.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, const QuadConfig& cfg,
                              std::span<const double> breakpoints = {}) {
    cfg.validate();
    if (!(a < b)) throw std::invalid_argument("integrate_adaptive: need a < b");
    auto nodes = detail::make_nodes(a, b, breakpoints);
    auto wrapped = [&f](double x) { return Complex(f(x)); };
    return detail::adaptive_on_nodes(wrapped, nodes, cfg);
}

// Principal value of g(x)/(x - c) over [a, b], a < c < b.  Uses the constant
// subtraction g(x) -> g(x) - g(c), whose quotient is regular at c, plus the
// analytic remainder g(c) ln((b-c)/(c-a)).
template <class G>
QuadResult integrate_pv(G&& g, double a, double b, double c, const QuadConfig& cfg,
                        std::span<const double> breakpoints = {}) {
    cfg.validate();
    if (!(a < b)) throw std::invalid_argument("integrate_pv: need a < b");
    if (!(a < c && c < b))
        throw std::domain_error("integrate_pv: pole must lie strictly inside (a, b)");
    const Complex gc = Complex(g(c));
    auto regular = [&g, gc, c](double x) { return (Complex(g(x)) - gc) / (x - c); };
    auto nodes = detail::make_nodes(a, b, breakpoints);
    if (std::find(nodes.begin(), nodes.end(), c) == nodes.end()) {
        nodes.push_back(c);
        std::sort(nodes.begin(), nodes.end());
    }
    QuadResult out = detail::adaptive_on_nodes(regular, nodes, cfg);
    out.value += gc * std::log((b - c) / (c - a));
    return out;
}

// Integral of g(E) e^{-iEt} over [a, b], t >= 0.  Initial panels are capped
// at one eighth of the oscillation period; throws OscillationBudgetError when
// that alone would exceed the panel budget.
template <class G>
QuadResult integrate_oscillatory(G&& g, double a, double b, double t, const QuadConfig& cfg,
                                 std::span<const double> breakpoints = {}) {
    cfg.validate();
    if (!(a < b)) throw std::invalid_argument("integrate_oscillatory: need a < b");
    if (t < 0.0) throw std::domain_error("integrate_oscillatory: t must be nonnegative");
    if (t == 0.0) return integrate_adaptive(g, a, b, cfg, breakpoints);

    const double cap = (2.0 * k_pi / t) / 8.0;
    auto seeds = detail::make_nodes(a, b, breakpoints);
    double panel_estimate = 0.0;
    for (std::size_t i = 0; i + 1 < seeds.size(); ++i)
        panel_estimate += std::ceil((seeds[i + 1] - seeds[i]) / cap);
    if (panel_estimate > static_cast<double>(cfg.max_panels))
        throw OscillationBudgetError(
            "integrate_oscillatory: oscillation count exceeds panel budget; "
            "use the contour representation for such times");

    std::vector<double> nodes;
    nodes.reserve(static_cast<std::size_t>(panel_estimate) + seeds.size());
    for (std::size_t i = 0; i + 1 < seeds.size(); ++i) {
        const double lo = seeds[i], hi = seeds[i + 1];
        const auto pieces = static_cast<std::size_t>(std::ceil((hi - lo) / cap));
        nodes.push_back(lo);
        for (std::size_t k = 1; k < pieces; ++k)
            nodes.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(pieces));
    }
    nodes.push_back(seeds.back());

    auto f = [&g, t](double e) { return Complex(g(e)) * std::polar(1.0, -e * t); };
    return detail::adaptive_on_nodes(f, nodes, cfg);
}

// Integral of h(y) e^{-yt} over [0, infinity), t > 0, via the substitution
// u = y t; the u-integral is truncated where the e^{-u} tail bound drops
// below the requested tolerance.
template <class H>
QuadResult integrate_semiinfinite_exp(H&& h, double t, const QuadConfig& cfg) {
    cfg.validate();
    if (!(t > 0.0)) throw std::domain_error("integrate_semiinfinite_exp: t must be positive");

    const double tol = std::min(cfg.abs_tol > 0.0 ? cfg.abs_tol : 1.0,
                                cfg.rel_tol > 0.0 ? cfg.rel_tol : 1.0);
    const double u_max = std::clamp(-std::log(tol) + 25.0, 50.0, 200.0);

    std::vector<double> nodes{0.0};
    for (double u = 0.5; u < u_max; u *= 2.0) nodes.push_back(u);
    nodes.push_back(u_max);

    auto f = [&h, t](double u) { return Complex(h(u / t)) * std::exp(-u); };
    QuadConfig cfg_u = cfg;
    cfg_u.abs_tol = cfg.abs_tol * t;  // tolerances are stated for the y-integral
    QuadResult out = detail::adaptive_on_nodes(f, nodes, cfg_u);
    out.value /= t;
    out.error_estimate /= t;
    return out;
}

}  // namespace decaylab
