#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace heatsing {

using Rational = boost::multiprecision::cpp_rational;

// Sparse bivariate polynomial in (a, b) over exact rationals.
// Canonical form: no zero coefficients stored, rationals kept reduced
// (cpp_rational normalizes on construction).
class RationalPoly {
  public:
    using Monomial = std::pair<int, int>; // (deg_a, deg_b)

    RationalPoly() = default;
    explicit RationalPoly(Rational c) {
        if (c != 0) terms_[{0, 0}] = std::move(c);
    }
    RationalPoly(int i, int j, Rational c) {
        if (c != 0) terms_[{i, j}] = std::move(c);
    }

    static RationalPoly var_a() { return RationalPoly(1, 0, 1); }
    static RationalPoly var_b() { return RationalPoly(0, 1, 1); }
    static RationalPoly constant(long v) { return RationalPoly(Rational(v)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator-() const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator*(const Rational& c) const;
    bool operator==(const RationalPoly& o) const { return terms_ == o.terms_; }

    std::complex<double> eval(std::complex<double> a, std::complex<double> b) const;
    double eval(double a, double b) const;
    Rational eval_exact(const Rational& a, const Rational& b) const;

    int total_degree() const;
    std::string str() const; // human-readable, for diagnostics

    // Exact division by a polynomial that is linear in at least one
    // variable (alpha*a + beta*b + gamma with alpha != 0 or beta != 0).
    // Returns the quotient; the remainder must vanish, otherwise
    // DivisionNotExactError is thrown with `step` in the message.
    RationalPoly divide_exact_linear(const Rational& alpha, const Rational& beta,
                                     const Rational& gamma, const std::string& step) const;

  private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

// theta_n as an exact polynomial: theta_n(x) = x(x+1)...(x+n-1) in the
// variable selected by `in_a`.
RationalPoly theta_poly(int n, bool in_a);

} // namespace heatsing
