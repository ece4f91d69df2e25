#pragma once

#include "heatsing/complex_gamma.hpp"
#include "heatsing/cutoff.hpp"
#include "heatsing/params.hpp"

namespace heatsing {

// Rising factorial theta_n(a) = a(a+1)...(a+n-1), theta_0 = 1.
Complex theta(int n, Complex a);

// Boundary coefficient c(a,b) of the t^{(1-a-b)/2} term. Evaluated in the
// pole-free product form
//   c(a,b) = -Gamma(1-a)Gamma(1-b)cos(pi(a-b)/2) / (2 sin(pi u/2) Gamma(1+u/2)),
// u = 1-a-b, which is the displayed Gamma-quotient form with the
// sin(pi(a+b)/2) zero cancelled against the Gamma(a+b-1) pole analytically,
// so the removable points a+b = 0, -2, -4, ... need no special casing.
// Throws LogPlaneError when a+b is within 1e-12 of 1, -1, -3, ...
Complex c_boundary(const ParamPair& p);

// Reference evaluation of the same coefficient through the literal
// Gamma-quotient product. Poles are NOT cancelled here; used to
// cross-check c_boundary away from the removable planes.
Complex c_boundary_reference(const ParamPair& p);

// Interior/right-end series coefficients c_n(a,b). For odd n with a+b near
// 1-n the rational zero of theta_n(a)+theta_n(b) is divided out exactly in
// the polynomial ring before evaluation. Even n with a+b = 1-n is a log
// plane: LogPlaneError.
Complex c_n(int n, const ParamPair& p);

// X(a,b) = (1-a-b) c(a,b), holomorphically extended across a+b = 1 where
// its value is -1.
Complex x_fn(const ParamPair& p);

// Constant term of the a+b = 1 (k = 0 log plane) expansion:
//   h_{a,1-a}(t) = -log(t)/2 + y_fn(a) + sum_{n>=1} c_n(a,1-a) t^{n/2} + ...
// Computed analytically from the digamma log-derivative of the product
// form of X; equals the negated parameter derivative of x_fn along the
// plane, y_fn(a) = -d/dd X(a+d, 1-a)|_{d=0} = -(psi(a)+psi(1-a)+gamma)/2.
double y_fn(double a);

// Coefficient of log(t) t^k on the plane a+b = 1-2k: -theta_2k(a)/(2 k!).
double log_coefficient(double a, int k);

// Constant term beta_0(a, 1-a, Xi1, Xi2) of the cutoff heat content on the
// k = 0 log plane; epsilon only regularizes the splitting and must lie
// below both cutoff plateaus. The cutoffs must vanish on [1/2, 1].
double beta0_cutoff_constant(double a, double epsilon, const CutoffSpec& xi1,
                       const CutoffSpec& xi2);

// Coefficient of t^{(1-a-b)/2} in the method-of-images correction term
// (single reflecting endpoint):
//   2^{-a-b} pi^{-1/2} Gamma((2-a-b)/2) Gamma(1-a)Gamma(1-b)/Gamma(2-a-b).
Complex bc_correction_coefficient(const ParamPair& p);

} // namespace heatsing
