#include "heatsing/boundary.hpp"

#include <cmath>

namespace heatsing {

namespace {

constexpr double kSqrtPi = 1.7724538509055160272981674833411;

// (4 pi t)^{-1/2} iint x^{-a} xt^{-b} exp(-(x - sgn*xt - 2m)^2 / 4t) over
// [0,1]^2; sgn = +1 for translation images, -1 for reflections.
QuadResult image_term(const ParamPair& p, double t, int m, int sgn, double tol) {
    const double a = p.ra(), b = p.rb();
    const double inv4t = 1.0 / (4.0 * t);
    QuadOptions inner_opt;
    inner_opt.tol = tol * 0.02;
    QuadOptions outer_opt;
    outer_opt.tol = tol * 0.5;
    double worst_inner = 0.0;
    long nodes = 0;
    auto outer_f = [&](double x, double dx0, double) {
        auto inner_f = [&](double xt, double dxt0, double) {
            double arg = x - sgn * xt - 2.0 * m;
            double g = std::exp(-arg * arg * inv4t);
            if (g == 0.0) return 0.0;
            return std::pow(dxt0, -b) * g;
        };
        QuadResult q = tanh_sinh(inner_f, 0.0, 1.0, inner_opt);
        worst_inner = std::max(worst_inner, q.error_estimate);
        nodes += q.nodes_used;
        return std::pow(dx0, -a) * q.value;
    };
    QuadResult outer = tanh_sinh(outer_f, 0.0, 1.0, outer_opt);
    const double pref = 1.0 / std::sqrt(4.0 * M_PI * t);
    QuadResult res;
    res.value = pref * outer.value;
    res.error_estimate = pref * (outer.error_estimate + worst_inner);
    res.nodes_used = outer.nodes_used + nodes;
    res.converged = outer.converged;
    return res;
}

// smallest |x - sgn*xt - 2m| over the unit square
double min_kernel_distance(int m, int sgn) {
    double lo = -sgn < 0 ? -1.0 : 0.0; // range of -sgn*xt
    double hi = -sgn < 0 ? 0.0 : 1.0;
    double amin = 0.0 + lo - 2.0 * m, amax = 1.0 + hi - 2.0 * m;
    if (amin <= 0.0 && amax >= 0.0) return 0.0;
    return std::min(std::abs(amin), std::abs(amax));
}

} // namespace

double image_kernel(double x, double xt, double t, const BCSpec& bc, int images) {
    if (!(t > 0.0)) throw DomainError("image_kernel: t must be positive");
    if (images < 1) throw DomainError("image_kernel: images must be >= 1");
    const double e0 = bc.left_sign(), e1 = bc.right_sign();
    const double pref = 1.0 / std::sqrt(4.0 * M_PI * t);
    double sum = 0.0;
    for (int m = -images; m <= images; ++m) {
        double par = (std::abs(m) % 2 == 0) ? 1.0 : e0 * e1; // (e0 e1)^m
        double dtr = x - xt - 2.0 * m;
        double drf = x + xt - 2.0 * m;
        sum += par * std::exp(-dtr * dtr / (4.0 * t));
        sum += e0 * par * std::exp(-drf * drf / (4.0 * t));
    }
    return pref * sum;
}

QuadResult heat_content_bc(const ParamPair& p, double t, const BCSpec& bc, int images,
                           double tol) {
    if (!p.is_real()) throw DomainError("heat_content_bc: real exponents only");
    if (!(t >= 1e-7 && t <= 0.05))
        throw DomainError("heat_content_bc: t outside [1e-7, 0.05] image regime");
    const double e0 = bc.left_sign(), e1 = bc.right_sign();
    const double a = p.ra(), b = p.rb();
    const double mass_bound = 1.0 / ((1.0 - a) * (1.0 - b));
    const double pref = 1.0 / std::sqrt(4.0 * M_PI * t);

    QuadResult total = heat_content_interval(p, t, std::nullopt, tol);
    for (int m = -images; m <= images; ++m) {
        double par = (std::abs(m) % 2 == 0) ? 1.0 : e0 * e1;
        // translation x t + 2m (skip m = 0: that is the free content above)
        if (m != 0) {
            double d = min_kernel_distance(m, +1);
            if (std::exp(-d * d / (4.0 * t)) * pref * mass_bound > tol * 0.1) {
                QuadResult q = image_term(p, t, m, +1, tol);
                total.value += par * q.value;
                total.error_estimate += q.error_estimate;
                total.nodes_used += q.nodes_used;
            }
        }
        // reflection -xt + 2m
        {
            double d = min_kernel_distance(m, -1);
            if (std::exp(-d * d / (4.0 * t)) * pref * mass_bound > tol * 0.1) {
                QuadResult q = (m == 0) ? quadrant_correction(p, t, tol)
                                        : image_term(p, t, m, -1, tol);
                total.value += e0 * par * q.value;
                total.error_estimate += q.error_estimate;
                total.nodes_used += q.nodes_used;
            }
        }
    }
    return total;
}

BoundaryReport verify_bc_expansion(const ParamPair& p, const std::vector<double>& t_grid,
                                const BCSpec& bc, int N, double tol, double slope_tol) {
    if (p.near_excluded_sum())
        throw LogPlaneError("verify_bc_expansion: use the log variant on excluded sums");
    BoundaryReport rep;
    rep.t_grid = t_grid;
    AsymptoticSeries free_series = interval_series(p, N);
    double corr = bc_correction_coefficient(p).real();
    double bpow = (1.0 - p.sum().real()) / 2.0;
    std::vector<double> errs;
    for (double t : t_grid) {
        QuadResult q = heat_content_bc(p, t, bc, 3, tol);
        double model = free_series.eval(t) + bc.left_sign() * corr * std::pow(t, bpow) +
                       bc.right_sign() * std::sqrt(t) / kSqrtPi;
        rep.bc_values.push_back(q.value);
        rep.bc_errors.push_back(q.error_estimate);
        rep.model_values.push_back(model);
        rep.residuals.push_back(q.value - model);
        errs.push_back(q.error_estimate);
    }
    SlopeFit fit = fit_residual_slope(rep.t_grid, rep.residuals, errs);
    // next unsubtracted terms: free t^{(N+1)/2} and the right-end t^1
    rep.predicted_exponent = std::min((N + 1) / 2.0, 1.0);
    rep.fitted_exponent = fit.slope;
    rep.below_floor = fit.below_floor;
    rep.pass = fit.below_floor || std::abs(fit.slope - rep.predicted_exponent) <= slope_tol;
    return rep;
}

BoundaryReport verify_bc_expansion_log(double a, int k, const std::vector<double>& t_grid,
                                    const BCSpec& bc, double tol, double rel_tol) {
    double b = -2.0 * k - 1.0 - a;
    ParamPair p(a, b);
    BoundaryReport rep;
    rep.t_grid = t_grid;
    for (double t : t_grid) {
        QuadResult q = heat_content_bc(p, t, bc, 3, tol);
        rep.bc_values.push_back(q.value);
        rep.bc_errors.push_back(q.error_estimate);
    }
    int kp = k + 1; // log plane index of a+b = 1-2(k+1)
    std::vector<std::vector<double>> cols;
    for (int n = 0; n <= 2 * kp + 1; ++n) {
        std::vector<double> c;
        for (double t : t_grid) c.push_back(std::pow(t, n / 2.0));
        cols.push_back(std::move(c));
    }
    {
        std::vector<double> c;
        for (double t : t_grid) c.push_back(std::pow(t, kp) * std::log(t));
        cols.push_back(std::move(c));
    }
    auto coef = least_squares(cols, rep.bc_values);
    rep.fitted_log_coeff = coef.back();
    rep.expected_log_coeff = log_coefficient(a, kp);
    for (size_t i = 0; i < t_grid.size(); ++i) {
        double model = 0.0;
        for (size_t j = 0; j < cols.size(); ++j) model += coef[j] * cols[j][i];
        rep.model_values.push_back(model);
        rep.residuals.push_back(rep.bc_values[i] - model);
    }
    if (rep.expected_log_coeff == 0.0)
        rep.pass = std::abs(rep.fitted_log_coeff) <= 5e-4;
    else
        rep.pass = std::abs(rep.fitted_log_coeff - rep.expected_log_coeff) <=
                   rel_tol * std::abs(rep.expected_log_coeff);
    return rep;
}

} // namespace heatsing
