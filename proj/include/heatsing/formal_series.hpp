#pragma once

#include "heatsing/rational_poly.hpp"

#include <string>
#include <vector>

namespace heatsing {

// Truncated formal power series in w = eta - 1 with exact polynomial
// coefficients. The ladder works in the symmetric variables (s, p) =
// (a+b, ab): every chain function is symmetric in (a, b), and all the
// division steps become linear in one of s, p. RationalPoly's two slots
// hold (s, p) throughout this module.
class FormalSeries {
  public:
    FormalSeries() = default;
    explicit FormalSeries(std::vector<RationalPoly> coeffs) : c_(std::move(coeffs)) {}

    // Series of eta^c = (1+w)^c with exponent c = cs*s + c0 (cs in {-1,0}),
    // truncated at order T: coefficient n is binom(c, n).
    static FormalSeries eta_power(int cs, long c0, int T);

    // Series of eta^{-a} + eta^{-b}: coefficient n is (-1)^n
    // (theta_n(a)+theta_n(b))/n!, generated in (s,p) by the moment
    // recurrence t_{n+1} = r_n + n t_n, r_{n+1} = s r_n - p t_n + n r_n.
    static FormalSeries eta_power_sum(int T);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const RationalPoly& operator[](int n) const { return c_[n]; }
    const std::vector<RationalPoly>& coeffs() const { return c_; }

    FormalSeries operator-(const FormalSeries& o) const;
    FormalSeries operator+(const FormalSeries& o) const;
    FormalSeries scaled(const RationalPoly& f) const;
    FormalSeries scaled(const Rational& f) const;

    // Divide by w^2: requires the first two coefficients to be the zero
    // polynomial (throws DivisionNotExactError naming `step`); drops two
    // orders of validity.
    FormalSeries shift_w2(const std::string& step) const;

    // Divide every coefficient exactly by alpha*s + beta*p + gamma.
    FormalSeries divide_linear(const Rational& alpha, const Rational& beta,
                               const Rational& gamma, const std::string& step) const;

  private:
    std::vector<RationalPoly> c_;
};

} // namespace heatsing
