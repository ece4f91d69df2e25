#pragma once

#include "heatsing/formal_series.hpp"
#include "heatsing/params.hpp"
#include "heatsing/rational_poly.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace heatsing {

// sigma_{k,l} as an exact rational function: num / (den_scale *
// prod_m (m + s)^e_m). The denominator factors are exactly the excluded
// hyperplanes a+b = -m of the strip O_k.
struct SigmaEntry {
    RationalPoly num;                 // in (s, p)
    std::map<int, int> den_factors;   // m -> multiplicity, factor (m + s)
    Rational den_scale = 1;

    Complex eval(Complex a, Complex b) const;
    double eval(double a, double b) const;
    RationalPoly den_expanded() const; // in (s, p)
};

struct SigmaTable {
    int k = 0;
    std::vector<SigmaEntry> sigma; // l = 0..k

    // Exact w-series of G_k = eta^{-a} + eta^{-b} - sum_l sigma_l A_l,
    // over a common denominator: coefficient n is g_num[n] / g_den.
    // Coefficients 0 .. 2k+1 are certified zero at build time.
    std::vector<RationalPoly> g_num;
    RationalPoly g_den;

    // G_k w-series as doubles at fixed real (a, b); index n = 0..order.
    std::vector<double> g_series_at(double a, double b) const;
    std::vector<double> sigma_at(double a, double b) const;
};

// G_k evaluator bound to a parameter pair: direct formula away from
// eta = 1, exact w-series inside |1 - eta| <= switch_radius where the
// direct form loses all its digits to cancellation.
struct GEvaluator {
    int k = -1;
    double a = 0, b = 0, s = 0;
    std::vector<double> sigma;    // empty for k = -1
    std::vector<double> g;        // w-series coefficients
    double switch_radius = 0.2;

    double operator()(double eta) const { return value(eta, 1.0 - eta); }
    double value(double eta, double one_minus_eta) const;
    double direct(double eta) const;
    double series(double one_minus_eta) const;
};

// The Regularization ladder for the half-line subtraction terms, rebuilt in
// exact arithmetic.
// Construction certifies every division (vanishing to order w^2 before
// each w^2 shift, and exact polynomial divisibility by the ab- and
// (n+a)(n+b)-type factors); a failure throws DivisionNotExactError.
// sigma tables come from the chain and are cross-checked against an
// independent exact triangular solve in the A-basis.
class Ladder {
  public:
    explicit Ladder(int truncation = 18);

    int truncation_order() const { return T_; }
    const SigmaTable& sigma_table(int k) const; // k in [0, 3]
    const std::vector<std::string>& certified_steps() const { return certified_; }

    // Pointwise values; p must lie in O_k (RegionError otherwise).
    GEvaluator g_evaluator(int k, const ParamPair& p) const;
    double eval_G(int k, double eta, const ParamPair& p) const;
    double eval_F(int k, double x, double xt, const ParamPair& p) const;

    void dump_sigma_json(int k, std::ostream& os) const;

    // Shared immutable instance for the quadrature module (higher
    // truncation for tight series tails).
    static const Ladder& shared();

  private:
    int T_;
    std::vector<SigmaTable> tables_; // k = 0..3
    std::vector<std::string> certified_;
};

// Expand a polynomial in (s, p) = (a+b, ab) into monomials in (a, b).
RationalPoly expand_sp_to_ab(const RationalPoly& poly_sp);

} // namespace heatsing
