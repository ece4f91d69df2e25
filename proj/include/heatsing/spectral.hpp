#pragma once

#include "heatsing/complex_gamma.hpp"
#include "heatsing/cutoff.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace heatsing {

// Source profile on [0, support]: pointwise values plus the endpoint
// singularity exponent at x = 0 (0 when smooth), so the coefficient
// quadrature can split off the singular panel.
struct ProfileSpec {
    std::function<double(double)> value;
    std::function<double(double)> deriv;   // may be empty
    std::function<double(double)> deriv2;  // may be empty
    double sing_exponent = 0.0;            // f ~ x^{-sing_exponent} at 0
    double support = 1.0;                  // f vanishes beyond this point
    double feature_scale = 1e300;          // smallest smooth variation scale

    // x^{-a} Xi(x); requires a < 1
    static ProfileSpec power_cutoff(double a, const CutoffSpec& xi);
    // x^p (1-x)^q on [0, 1] (vanishes at both ends for p, q >= 1)
    static ProfileSpec poly_bridge(int p, int q);
    // indicator of [0, len]
    static ProfileSpec indicator(double len = 1.0);

    ProfileSpec derivative() const;   // pointwise f'
    ProfileSpec second_derivative() const;
};

struct FourierProfile {
    enum class Provenance { FromSamples, FromClosedForm };
    int n_max = 0;
    std::vector<Complex> gamma; // index n + n_max, n in [-n_max, n_max]
    Provenance provenance = Provenance::FromSamples;

    const Complex& coeff(int n) const { return gamma[n + n_max]; }
    Complex& coeff(int n) { return gamma[n + n_max]; }
    double max_abs() const;
};

// gamma_n(f) = (2 pi)^{-1/2} int f(x) e^{-i n x} dx over the support,
// singular panel handled by the double-exponential rule, oscillatory bulk
// by composite Gauss-Legendre panels sized to the phase.
FourierProfile fourier_coefficients(const ProfileSpec& f, int n_max, double tol = 1e-11);

// Closed-form coefficients of the indicator of [0, len]:
// gamma_0 = len / sqrt(2 pi), gamma_n = (1 - e^{-i n len}) / (i n sqrt(2 pi)).
FourierProfile indicator_coefficients(double len, int n_max);

// beta(phi, rho)(t) = sum_n e^{-t n^2} gamma_n(phi) gamma_{-n}(rho).
// TruncationError when e^{-t N^2} max|gamma|^2 >= 1e-14.
double heat_content_circle(const FourierProfile& phi, const FourierProfile& rho, double t);

// max_n |gamma_n(f') - i n gamma_n(f)|; requires f(0) = f(support) = 0.
double verify_derivative_identity(const ProfileSpec& f, int n_max, double tol = 1e-11);

// Max relative deviation between beta(phi'', rho)(t) and the centered
// finite difference of beta(phi, rho, .) over the grid.
double verify_time_derivative(const ProfileSpec& phi, const ProfileSpec& rho,
                              const std::vector<double>& t_grid, int n_max,
                              double dt = 1e-5, double tol = 1e-11);

} // namespace heatsing
