#pragma once

#include "heatsing/coefficients.hpp"
#include "heatsing/params.hpp"
#include "heatsing/quadrature.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace heatsing {

// Finite asymptotic model: sum of coeff * t^power * log(t)^log_power.
class AsymptoticSeries {
  public:
    struct Term {
        double power = 0.0;
        int log_power = 0; // 0 or 1
        Complex coeff;
    };

    void add(double power, int log_power, Complex coeff);
    double eval(double t) const;        // real part
    Complex eval_complex(double t) const;
    const std::vector<Term>& terms() const { return terms_; }

  private:
    std::vector<Term> terms_; // kept sorted by (power, log_power)
};

struct VerificationReport {
    std::vector<double> t_grid;
    std::vector<double> quad_values;
    std::vector<double> quad_errors;
    std::vector<double> series_values;
    std::vector<double> residuals;
    double fitted_exponent = 0.0;
    std::optional<double> fitted_log_coeff;
    double predicted_exponent = 0.0;
    bool below_floor = false; // residuals indistinguishable from quadrature error
    bool pass = false;
    double tolerance_used = 0.0;
};

// Interval series: boundary term c(a,b) t^{(1-a-b)/2} plus powers t^{n/2},
// n = 0..N. LogPlaneError on the log planes.
AsymptoticSeries interval_series(const ParamPair& p, int N);

// k = 0 log-plane series: -log(t)/2 + y_fn(a) + sum_{n=1..N} c_n(a,1-a) t^{n/2}.
AsymptoticSeries series_logplane_k0(double a, int N = 4);

// Least-squares slope of log|residual| against log t, excluding points
// within floor_factor of the quadrature error floor.
struct SlopeFit {
    double slope = 0.0;
    int points_used = 0;
    bool below_floor = false;
};
SlopeFit fit_residual_slope(const std::vector<double>& t, const std::vector<double>& resid,
                            const std::vector<double>& err_floor, double floor_factor = 10.0);

// Quadrature vs series residual-exponent verification (expected exponent
// (N+1)/2); pass iff |fitted - predicted| <= slope_tol or all residuals
// sit below the quadrature error floor.
VerificationReport verify_expansion(const ParamPair& p, const std::vector<double>& t_grid,
                                    int N, double tol = 1e-11, double slope_tol = 0.15,
                                    int threads = 1);

// Log-plane verification. k = 0: log-slope of h against log t must be
// -1/2 within log_slope_tol, and the residual after series_logplane_k0
// decays with exponent >= 0.4. k >= 1: fit the t^k log t coefficient
// against smooth nuisance powers t^{n/2}, n <= 2k+1, and compare with
// log_coefficient(a, k) within rel_tol.
VerificationReport verify_logplane(double a, int k, const std::vector<double>& t_grid,
                                   double tol = 1e-11, double log_slope_tol = 0.02,
                                   double rel_tol = 0.05);

// Shifted-parameter recursion residual at a single t:
//   | h_{a,b} - (D + Z_N) / (2t(1-a)) |
// with D the combined shifted-pair quadrature and Z_N the closed
// boundary-term series sum_{n<=N} t^{(n+2)/2} 2^n theta_n(b)
// Gamma((n+1)/2) / (sqrt(pi) n!).
double verify_recursion(const ParamPair& p, double t, int N, double tol = 1e-12);

// Smooth-rho case: b a non-positive integer; same residual-exponent check
// as verify_expansion (the generic coefficients apply by continuation).
VerificationReport verify_smooth_rho_case(double a, int b, const std::vector<double>& t_grid,
                                          int N, double tol = 1e-11, double slope_tol = 0.15);

// Small dense least squares (QR); returns coefficients for the given
// design columns. Used by the log-plane and boundary fits.
std::vector<double> least_squares(const std::vector<std::vector<double>>& columns,
                                  const std::vector<double>& rhs);

} // namespace heatsing
