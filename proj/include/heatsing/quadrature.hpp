#pragma once

#include "heatsing/cutoff.hpp"
#include "heatsing/ladder.hpp"
#include "heatsing/params.hpp"
#include "heatsing/tanh_sinh.hpp"

#include <optional>
#include <utility>

namespace heatsing {

// Free-line heat kernel (4 pi t)^{-1/2} exp(-(x-xt)^2 / (4t)).
double kernel_line(double x, double xt, double t);

// Heat content of [0,1] with data x^{-a}, x^{-b} (optionally damped by
// cutoffs), evaluated through the symmetrized substitution xt = eta x:
//   h = (4 pi t)^{-1/2} int_0^1 x^{1-a-b} int_0^1 W(x, eta)
//         exp(-x^2 (1-eta)^2 / 4t) deta dx,
// with W = eta^{-a} + eta^{-b} for plain data. The Gaussian ridge sits at
// the eta = 1 endpoint where the double-exponential nodes cluster, so node
// counts stay flat as t -> 0. Throws MaxRefinementError / DomainError.
QuadResult heat_content_interval(const ParamPair& p, double t,
                                 const std::optional<std::pair<CutoffSpec, CutoffSpec>>& cutoffs =
                                     std::nullopt,
                                 double tol = 1e-11);

// Regularized half-line boundary coefficient, k in [-1, 3]. Evaluates the
// 1-D integral of G_k against (1-eta)^{a+b-2} (quadrature away from
// eta = 1, exact term-by-term series integration on the last stretch where
// the direct form cancels catastrophically), multiplies by the Gamma
// prefactor, and adds the sigma-weighted closed-form coefficients of the
// subtracted smooth pieces so the result is the full t^{(1-a-b)/2}
// coefficient — identical for every admissible k. RegionError if p is
// outside the strip O_k.
QuadResult c_k_integral(int k, const ParamPair& p, double tol = 1e-11);

// Quadrant correction integral (4 pi t)^{-1/2} iint e^{-(x+xt)^2/4t}
// x^{-a} xt^{-b} over [0,1]^2.
QuadResult quadrant_correction(const ParamPair& p, double t, double tol = 1e-11);

// Closed form for constant data on [0, len]:
//   len erf(len / sqrt(4t)) - sqrt(4t/pi) (1 - exp(-len^2/(4t))).
double constant_data_line_content(double len, double t);

// Combined shifted-pair difference h_{a-2,b} - h_{a-1,b-1} evaluated as a
// single positive-integrand quadrature (the naive difference of two O(1)
// quadratures loses the ~2t(1-a) h cancellation).
QuadResult shifted_pair_difference(const ParamPair& p, double t, double tol = 1e-12);

} // namespace heatsing
