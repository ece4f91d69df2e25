#include "heatsing/quadrature.hpp"
#include "heatsing/coefficients.hpp"

#include <cmath>

namespace heatsing {

namespace {

constexpr double kSqrtPi = 1.7724538509055160272981674833411;

void require_real_quad_params(const ParamPair& p, const char* op) {
    if (!p.is_real()) throw DomainError(std::string(op) + ": real exponents only");
}

void require_t_range(double t, const char* op) {
    if (!(t >= 1e-7 && t <= 1.0))
        throw DomainError(std::string(op) + ": t outside [1e-7, 1]");
}

// Nested 2-D evaluation: outer x-integral of x^{1-a-b} times an inner
// eta-integral. `inner_weight(x, eta, one_minus_eta)` supplies the data
// factor; `ridge_sign` selects exp(-x^2 (1 -+ eta)^2 / 4t).
template <class W>
QuadResult symmetrized_double(const W& inner_weight, double a, double b, double t,
                              bool plus_kernel, double tol) {
    const double inv4t = 1.0 / (4.0 * t);
    QuadOptions inner_opt;
    inner_opt.tol = tol * 0.02;
    inner_opt.max_level = 12;
    QuadOptions outer_opt;
    outer_opt.tol = tol * 0.5;
    outer_opt.max_level = 11;

    double worst_inner_err = 0.0;
    long inner_nodes = 0;
    auto outer_f = [&](double x, double dist_lo, double) {
        const double x2 = x * x * inv4t;
        auto inner_f = [&](double eta, double eta_lo, double eta_hi) {
            double gap = plus_kernel ? (1.0 + eta) : eta_hi;
            double g = std::exp(-x2 * gap * gap);
            if (g == 0.0) return 0.0;
            return inner_weight(x, eta, eta_lo, eta_hi) * g;
        };
        QuadResult q = tanh_sinh(inner_f, 0.0, 1.0, inner_opt);
        worst_inner_err = std::max(worst_inner_err, q.error_estimate);
        inner_nodes += q.nodes_used;
        return std::pow(dist_lo, 1.0 - a - b) * q.value;
    };
    QuadResult outer = tanh_sinh(outer_f, 0.0, 1.0, outer_opt);
    const double pref = 1.0 / std::sqrt(4.0 * M_PI * t);
    QuadResult res;
    res.value = pref * outer.value;
    res.error_estimate = pref * (outer.error_estimate + worst_inner_err);
    res.nodes_used = outer.nodes_used + inner_nodes;
    res.converged = outer.converged;
    return res;
}

} // namespace

double kernel_line(double x, double xt, double t) {
    if (!(t > 0.0)) throw DomainError("kernel_line: t must be positive");
    double d = x - xt;
    return std::exp(-d * d / (4.0 * t)) / std::sqrt(4.0 * M_PI * t);
}

QuadResult heat_content_interval(const ParamPair& p, double t,
                                 const std::optional<std::pair<CutoffSpec, CutoffSpec>>& cutoffs,
                                 double tol) {
    require_real_quad_params(p, "heat_content_interval");
    require_t_range(t, "heat_content_interval");
    const double a = p.ra(), b = p.rb();

    QuadResult res;
    if (!cutoffs) {
        res = symmetrized_double(
            [&](double, double, double eta_lo, double) {
                return std::pow(eta_lo, -a) + std::pow(eta_lo, -b);
            },
            a, b, t, false, tol);
    } else {
        const CutoffSpec& xi1 = cutoffs->first;
        const CutoffSpec& xi2 = cutoffs->second;
        res = symmetrized_double(
            [&](double x, double eta, double eta_lo, double) {
                double xe = x * eta;
                return xi1.value(x) * xi2.value(xe) * std::pow(eta_lo, -b) +
                       xi2.value(x) * xi1.value(xe) * std::pow(eta_lo, -a);
            },
            a, b, t, false, tol);
    }
    if (!res.converged)
        throw MaxRefinementError("heat_content_interval: tolerance not reached",
                                 res.error_estimate);
    return res;
}

QuadResult quadrant_correction(const ParamPair& p, double t, double tol) {
    require_real_quad_params(p, "quadrant_correction");
    if (!(t > 0.0)) throw DomainError("quadrant_correction: t must be positive");
    const double a = p.ra(), b = p.rb();
    QuadResult res = symmetrized_double(
        [&](double, double, double eta_lo, double) {
            return std::pow(eta_lo, -a) + std::pow(eta_lo, -b);
        },
        a, b, t, true, tol);
    if (!res.converged)
        throw MaxRefinementError("quadrant_correction: tolerance not reached",
                                 res.error_estimate);
    return res;
}

QuadResult c_k_integral(int k, const ParamPair& p, double tol) {
    require_real_quad_params(p, "c_k_integral");
    if (k < -1 || k > 3) throw DomainError("c_k_integral: k must be in [-1, 3]");
    if (!p.in_strip(k))
        throw RegionError("c_k_integral: (a,b) outside strip O_" + std::to_string(k));
    const double a = p.ra(), b = p.rb(), s = a + b;
    const Ladder& ladder = Ladder::shared();
    GEvaluator g = ladder.g_evaluator(k, p);

    // eta in [0, eta_split]: direct evaluation (cancellation bounded by
    // (1-eta_split)^{2k+2}); eta in [eta_split, 1]: exact term-by-term
    // integration of the certified w-series against (1-eta)^{s-2}:
    //   int_{eta0}^1 w^n (1-eta)^{s-2} deta = (-1)^n w0^{n+s-1} / (n+s-1).
    const double w0 = 0.2;
    const double eta_split = 1.0 - w0;

    QuadOptions opt;
    opt.tol = tol;
    QuadResult q = tanh_sinh(
        [&](double eta, double, double) {
            double one_minus = 1.0 - eta; // >= w0 here, no cancellation
            return g.direct(eta) * std::pow(one_minus, s - 2.0);
        },
        0.0, eta_split, opt);

    double tail = 0.0;
    if (k >= 0) {
        for (size_t n = 2 * k + 2; n < g.g.size(); ++n) {
            double sign = (n % 2 == 0) ? 1.0 : -1.0;
            tail += g.g[n] * sign * std::pow(w0, n + s - 1.0) / (n + s - 1.0);
        }
    } else {
        // k = -1: integrable only for s > 1; integrate the raw series of
        // eta^{-a}+eta^{-b} (binomials), which converges on |w| <= 0.2
        double ca = -a, cb = -b;
        double term_a = 1.0, term_b = 1.0;
        for (int n = 0; n < 60; ++n) {
            if (n > 0) {
                term_a *= (ca - (n - 1)) / n;
                term_b *= (cb - (n - 1)) / n;
            }
            double sign = (n % 2 == 0) ? 1.0 : -1.0;
            tail += (term_a + term_b) * sign * std::pow(w0, n + s - 1.0) / (n + s - 1.0);
        }
    }

    const double pref =
        std::pow(2.0, -s) / kSqrtPi * gamma(Complex((2.0 - s) / 2.0, 0.0)).real();
    QuadResult res;
    res.value = pref * (q.value + tail);
    res.error_estimate = pref * q.error_estimate;
    res.nodes_used = q.nodes_used;
    res.converged = q.converged;

    // add the sigma-weighted boundary coefficients of the subtracted
    // smooth pieces: the patched value equals c(a, b) on every strip
    if (k >= 0) {
        auto sig = ladder.sigma_table(k).sigma_at(a, b);
        for (int l = 0; l <= k; ++l) {
            ParamPair shifted(s + l, static_cast<double>(-l));
            res.value += sig[l] * c_boundary(shifted).real();
        }
    }
    if (!res.converged)
        throw MaxRefinementError("c_k_integral: tolerance not reached", res.error_estimate);
    return res;
}

double constant_data_line_content(double len, double t) {
    double r = len / std::sqrt(4.0 * t);
    return len * std::erf(r) - std::sqrt(4.0 * t / M_PI) * (1.0 - std::exp(-r * r));
}

QuadResult shifted_pair_difference(const ParamPair& p, double t, double tol) {
    require_real_quad_params(p, "shifted_pair_difference");
    require_t_range(t, "shifted_pair_difference");
    const double a = p.ra(), b = p.rb();
    // h_{a-2,b} - h_{a-1,b-1} = (4 pi t)^{-1/2} iint x^{1-a} xt^{-b}
    // (x - xt) e^{...}; symmetrized integrand x^{3-a-b} (1-eta)
    // (eta^{-b} - eta^{1-a}), positive for a+b < 1.
    const double inv4t = 1.0 / (4.0 * t);
    QuadOptions inner_opt;
    inner_opt.tol = tol * 0.02;
    QuadOptions outer_opt;
    outer_opt.tol = tol * 0.5;
    double worst_inner = 0.0;
    long inner_nodes = 0;
    auto outer_f = [&](double x, double dist_lo, double) {
        const double x2 = x * x * inv4t;
        auto inner_f = [&](double, double eta_lo, double eta_hi) {
            double gexp = std::exp(-x2 * eta_hi * eta_hi);
            if (gexp == 0.0) return 0.0;
            return eta_hi * (std::pow(eta_lo, -b) - std::pow(eta_lo, 1.0 - a)) * gexp;
        };
        QuadResult q = tanh_sinh(inner_f, 0.0, 1.0, inner_opt);
        worst_inner = std::max(worst_inner, q.error_estimate);
        inner_nodes += q.nodes_used;
        return std::pow(dist_lo, 3.0 - a - b) * q.value;
    };
    QuadResult outer = tanh_sinh(outer_f, 0.0, 1.0, outer_opt);
    const double pref = 1.0 / std::sqrt(4.0 * M_PI * t);
    QuadResult res;
    res.value = pref * outer.value;
    res.error_estimate = pref * (outer.error_estimate + worst_inner);
    res.nodes_used = outer.nodes_used + inner_nodes;
    res.converged = outer.converged;
    if (!res.converged)
        throw MaxRefinementError("shifted_pair_difference: tolerance not reached",
                                 res.error_estimate);
    return res;
}

} // namespace heatsing
