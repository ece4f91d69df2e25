#include "heatsing/coefficients.hpp"

#include "heatsing/rational_poly.hpp"
#include "heatsing/tanh_sinh.hpp"

#include <cmath>

namespace heatsing {

namespace {

constexpr double kSqrtPi = 1.7724538509055160272981674833411;
constexpr double kEulerGamma = 0.57721566490153286060651209008240;

// u / sin(pi u / 2): removable zero/zero at u = 0 (value 2/pi).
Complex u_over_sin_half(Complex u) {
    if (std::abs(u) < 1e-8) {
        Complex v = Complex(M_PI / 2.0, 0.0) * u;
        // u/sin(pi u/2) = (2/pi) / (1 - v^2/6 + ...)
        return Complex(2.0 / M_PI, 0.0) / (Complex(1.0, 0.0) - v * v / 6.0);
    }
    return u / sin_pi(u / 2.0);
}

void require_off_log_planes(const ParamPair& p, const char* op) {
    if (p.near_excluded_sum(1e-12))
        throw LogPlaneError(std::string(op) + ": a+b on a log plane (1, -1, -3, ...)");
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

Complex theta(int n, Complex a) {
    Complex p(1.0, 0.0);
    for (int i = 0; i < n; ++i) p *= a + Complex(i, 0.0);
    return p;
}

Complex c_boundary(const ParamPair& p) {
    require_off_log_planes(p, "c_boundary");
    Complex a = p.a(), b = p.b();
    Complex u = Complex(1.0, 0.0) - a - b;
    Complex denom = 2.0 * sin_pi(u / 2.0) * gamma(Complex(1.0, 0.0) + u / 2.0);
    return -gamma(Complex(1.0, 0.0) - a) * gamma(Complex(1.0, 0.0) - b) *
           cos_pi((a - b) / 2.0) / denom;
}

Complex c_boundary_reference(const ParamPair& p) {
    Complex a = p.a(), b = p.b();
    Complex s = a + b;
    return complex_power(2.0, -s) / kSqrtPi * gamma((Complex(2.0, 0.0) - s) / 2.0) *
           gamma(s - Complex(1.0, 0.0)) *
           (gamma(Complex(1.0, 0.0) - a) / gamma(b) + gamma(Complex(1.0, 0.0) - b) / gamma(a));
}

Complex c_n(int n, const ParamPair& p) {
    if (n < 0) throw DomainError("c_n: n must be non-negative");
    Complex a = p.a(), b = p.b();
    Complex denom_lin = Complex(1.0 - n, 0.0) - a - b;
    const double prefac = std::pow(2.0, n - 1) *
                          std::tgamma((1.0 + n) / 2.0) / (kSqrtPi * factorial(n));
    if (std::abs(denom_lin) < 1e-6) {
        if (n % 2 == 0)
            throw LogPlaneError("c_n: a+b = 1-n with n even is a log plane");
        // odd n: theta_n(a)+theta_n(b) vanishes on the plane; divide the
        // linear factor out exactly in the polynomial ring, then evaluate.
        RationalPoly num = theta_poly(n, true) + theta_poly(n, false);
        RationalPoly quot =
            num.divide_exact_linear(-1, -1, Rational(1 - n), "c_n odd removable");
        return quot.eval(a, b) * prefac;
    }
    return (theta(n, a) + theta(n, b)) / denom_lin * prefac;
}

Complex x_fn(const ParamPair& p) {
    Complex a = p.a(), b = p.b();
    Complex u = Complex(1.0, 0.0) - a - b;
    // X = (1-a-b) c(a,b); the sin zero at u=0 is cancelled by the linear
    // factor, so X extends across a+b=1 (value -1 there).
    return -gamma(Complex(1.0, 0.0) - a) * gamma(Complex(1.0, 0.0) - b) *
           cos_pi((a - b) / 2.0) * u_over_sin_half(u) /
           (2.0 * gamma(Complex(1.0, 0.0) + u / 2.0));
}

double y_fn(double a) {
    if (!(0.0 < a && a < 1.0)) throw DomainError("y_fn: requires 0 < a < 1");
    double pa = digamma(Complex(a, 0.0)).real();
    double pb = digamma(Complex(1.0 - a, 0.0)).real();
    return -(pa + pb + kEulerGamma) / 2.0;
}

double log_coefficient(double a, int k) {
    if (!(a < 1.0)) throw DomainError("log_coefficient: requires a < 1");
    if (k < 0) throw DomainError("log_coefficient: k must be non-negative");
    double th = theta(2 * k, Complex(a, 0.0)).real();
    return -th / (2.0 * factorial(k));
}

double beta0_cutoff_constant(double a, double epsilon, const CutoffSpec& xi1,
                       const CutoffSpec& xi2) {
    if (!(0.0 < a && a < 1.0)) throw DomainError("beta0: requires 0 < a < 1 (b = 1-a)");
    if (xi1.kind != CutoffSpec::Kind::SmoothStep || xi2.kind != CutoffSpec::Kind::SmoothStep)
        throw DomainError("beta0: cutoffs must be smooth steps");
    if (!(xi1.support_end < 0.5 && xi2.support_end < 0.5))
        throw DomainError("beta0: cutoffs must vanish on a neighborhood of [1/2, 1]");
    if (!(epsilon > 0.0 && epsilon < std::min(xi1.plateau_end, xi2.plateau_end)))
        throw DomainError("beta0: epsilon must lie below both cutoff plateaus");

    double v = std::log(epsilon * epsilon) / 2.0 + kEulerGamma / 2.0 +
               std::log(std::sqrt(2.0) - 1.0) + 2.0 * std::log(2.0);

    QuadOptions opt;
    opt.tol = 1e-13;
    // cutoff product over [epsilon, 1/2]; integrand vanishes beyond the
    // supports so the upper end is harmless
    QuadResult q1 = tanh_sinh_plain(
        [&](double x) { return xi1.value(x) * xi2.value(x) / x; }, epsilon, 0.5, opt);
    v += q1.value;

    // q-integral: removable singularity at q=0 handled by a Taylor branch,
    // integrable (1-q)^{-a} at q=1 via the endpoint-distance channel
    QuadResult q2 = tanh_sinh(
        [&](double q, double dist_lo, double dist_hi) {
            if (dist_lo < 1e-5) {
                // f(q)/q = q(2 + (2a-1)^2) + O(q^3)
                double c = 2.0 * a - 1.0;
                return dist_lo * (2.0 + c * c);
            }
            double one_minus_q = dist_hi;
            double f = std::pow(1.0 + q, a - 1.0) * std::pow(one_minus_q, -a) +
                       std::pow(one_minus_q, a - 1.0) * std::pow(1.0 + q, -a) -
                       2.0 / std::sqrt(1.0 + q * q);
            return f / q;
        },
        0.0, 1.0, opt);
    v += q2.value / 2.0;
    return v;
}

Complex bc_correction_coefficient(const ParamPair& p) {
    Complex a = p.a(), b = p.b();
    Complex s = a + b;
    return complex_power(2.0, -s) / kSqrtPi * gamma((Complex(2.0, 0.0) - s) / 2.0) *
           gamma(Complex(1.0, 0.0) - a) * gamma(Complex(1.0, 0.0) - b) /
           gamma(Complex(2.0, 0.0) - s);
}

} // namespace heatsing
