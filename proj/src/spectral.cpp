#include "heatsing/spectral.hpp"
#include "heatsing/errors.hpp"
#include "heatsing/tanh_sinh.hpp"

#include <cmath>

namespace heatsing {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005024157652848110;

// 12-point Gauss-Legendre on [-1, 1]
constexpr double kGL12X[12] = {
    -0.9815606342467192506905491, -0.9041172563704748566784659,
    -0.7699026741943046870368938, -0.5873179542866174472967024,
    -0.3678314989981801937526915, -0.1252334085114689154724414,
    0.1252334085114689154724414,  0.3678314989981801937526915,
    0.5873179542866174472967024,  0.7699026741943046870368938,
    0.9041172563704748566784659,  0.9815606342467192506905491,
};
constexpr double kGL12W[12] = {
    0.0471753363865118271946160, 0.1069393259953184309602547,
    0.1600783285433462263346525, 0.2031674267230659217490645,
    0.2334925365383548087608499, 0.2491470458134027850005624,
    0.2491470458134027850005624, 0.2334925365383548087608499,
    0.2031674267230659217490645, 0.1600783285433462263346525,
    0.1069393259953184309602547, 0.0471753363865118271946160,
};

Complex oscillatory_integral(const ProfileSpec& spec, int n, double tol) {
    // integral of f(x) e^{-i n x} over [0, support]
    const auto& f = spec.value;
    const double support = spec.support;
    const double sing_exponent = spec.sing_exponent;
    const double absn = std::abs(static_cast<double>(n));
    // singular head: phase below ~1 radian, handled by tanh-sinh
    double head = (absn <= 1.0) ? support : std::min(support, 1.0 / absn);
    if (sing_exponent <= 0.0 && absn <= 1e-12) head = support; // smooth, non-oscillatory
    QuadOptions opt;
    opt.tol = tol;
    QuadResult re = tanh_sinh(
        [&](double x, double dl, double) {
            (void)dl;
            return f(x) * std::cos(n * x);
        },
        0.0, head, opt);
    QuadResult im = tanh_sinh(
        [&](double x, double, double) { return f(x) * std::sin(n * x); }, 0.0, head, opt);
    Complex acc(re.value, -im.value);

    if (head < support) {
        // composite Gauss-Legendre panels, capped both by ~pi phase and by
        // the distance to the singular origin so algebraic growth of the
        // integrand's derivatives never outruns the rule
        double lo2 = head;
        double sr = 0.0, si = 0.0;
        while (lo2 < support) {
            double width = (absn > 0.0) ? M_PI / absn : (support - lo2);
            width = std::min(width, lo2);
            // resolve the profile's own smooth features (cutoff shoulders)
            width = std::min(width, spec.feature_scale / 20.0);
            double hi2 = std::min(support, lo2 + std::max(width, 1e-14));
            double mid = 0.5 * (lo2 + hi2), half = 0.5 * (hi2 - lo2);
            for (int j = 0; j < 12; ++j) {
                double x = mid + half * kGL12X[j];
                double fx = f(x) * half;
                sr += kGL12W[j] * fx * std::cos(n * x);
                si += kGL12W[j] * fx * std::sin(n * x);
            }
            lo2 = hi2;
        }
        acc += Complex(sr, -si);
    }
    return acc;
}

} // namespace

ProfileSpec ProfileSpec::power_cutoff(double a, const CutoffSpec& xi) {
    if (!(a < 1.0)) throw DomainError("power_cutoff: exponent must be < 1");
    ProfileSpec spec;
    spec.sing_exponent = a;
    spec.support = (xi.kind == CutoffSpec::Kind::None) ? 1.0 : xi.support_end;
    if (xi.kind == CutoffSpec::Kind::SmoothStep)
        spec.feature_scale = xi.support_end - xi.plateau_end;
    spec.value = [a, xi](double x) { return std::pow(x, -a) * xi.value(x); };
    spec.deriv = [a, xi](double x) {
        return -a * std::pow(x, -a - 1.0) * xi.value(x) + std::pow(x, -a) * xi.deriv(x);
    };
    spec.deriv2 = [a, xi](double x) {
        return a * (a + 1.0) * std::pow(x, -a - 2.0) * xi.value(x) -
               2.0 * a * std::pow(x, -a - 1.0) * xi.deriv(x) +
               std::pow(x, -a) * xi.deriv2(x);
    };
    return spec;
}

ProfileSpec ProfileSpec::poly_bridge(int p, int q) {
    ProfileSpec spec;
    spec.sing_exponent = -static_cast<double>(p); // vanishes like x^p
    spec.support = 1.0;
    spec.value = [p, q](double x) { return std::pow(x, p) * std::pow(1.0 - x, q); };
    spec.deriv = [p, q](double x) {
        double xp = std::pow(x, p), om = std::pow(1.0 - x, q);
        double d = 0.0;
        if (p > 0) d += p * std::pow(x, p - 1) * om;
        if (q > 0) d -= q * xp * std::pow(1.0 - x, q - 1);
        return d;
    };
    spec.deriv2 = [p, q](double x) {
        double d = 0.0;
        if (p > 1) d += p * (p - 1) * std::pow(x, p - 2) * std::pow(1.0 - x, q);
        if (p > 0 && q > 0) d -= 2.0 * p * q * std::pow(x, p - 1) * std::pow(1.0 - x, q - 1);
        if (q > 1) d += q * (q - 1) * std::pow(x, p) * std::pow(1.0 - x, q - 2);
        return d;
    };
    return spec;
}

ProfileSpec ProfileSpec::indicator(double len) {
    ProfileSpec spec;
    spec.sing_exponent = 0.0;
    spec.support = len;
    spec.value = [](double) { return 1.0; };
    return spec;
}

ProfileSpec ProfileSpec::derivative() const {
    if (!deriv) throw DomainError("ProfileSpec: derivative not available");
    ProfileSpec spec;
    spec.value = deriv;
    spec.deriv = deriv2;
    spec.sing_exponent = sing_exponent + 1.0;
    spec.support = support;
    spec.feature_scale = feature_scale;
    return spec;
}

ProfileSpec ProfileSpec::second_derivative() const {
    if (!deriv2) throw DomainError("ProfileSpec: second derivative not available");
    ProfileSpec spec;
    spec.value = deriv2;
    spec.sing_exponent = sing_exponent + 2.0;
    spec.support = support;
    spec.feature_scale = feature_scale;
    return spec;
}

double FourierProfile::max_abs() const {
    double m = 0.0;
    for (const auto& g : gamma) m = std::max(m, std::abs(g));
    return m;
}

FourierProfile fourier_coefficients(const ProfileSpec& f, int n_max, double tol) {
    if (f.sing_exponent >= 1.0)
        throw DomainError("fourier_coefficients: exponent must be < 1 (L1 data)");
    if (f.support > 2.0 * M_PI)
        throw DomainError("fourier_coefficients: support must fit inside [-pi, pi) scale");
    FourierProfile prof;
    prof.n_max = n_max;
    prof.gamma.assign(2 * n_max + 1, Complex(0.0, 0.0));
    prof.provenance = FourierProfile::Provenance::FromSamples;
    for (int n = 0; n <= n_max; ++n) {
        prof.coeff(n) = oscillatory_integral(f, n, tol) / kSqrt2Pi;
        if (n > 0) prof.coeff(-n) = oscillatory_integral(f, -n, tol) / kSqrt2Pi;
    }
    return prof;
}

FourierProfile indicator_coefficients(double len, int n_max) {
    FourierProfile prof;
    prof.n_max = n_max;
    prof.gamma.assign(2 * n_max + 1, Complex(0.0, 0.0));
    prof.provenance = FourierProfile::Provenance::FromClosedForm;
    prof.coeff(0) = Complex(len / kSqrt2Pi, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        Complex in(0.0, static_cast<double>(n));
        Complex v = (Complex(1.0, 0.0) - std::exp(-in * len)) / in;
        prof.coeff(n) = v / kSqrt2Pi;
        Complex inm(0.0, static_cast<double>(-n));
        prof.coeff(-n) = (Complex(1.0, 0.0) - std::exp(-inm * len)) / inm / kSqrt2Pi;
    }
    return prof;
}

double heat_content_circle(const FourierProfile& phi, const FourierProfile& rho, double t) {
    if (!(t > 0.0)) throw DomainError("heat_content_circle: t must be positive");
    int N = std::min(phi.n_max, rho.n_max);
    double mg = std::max(phi.max_abs(), rho.max_abs());
    double tail = std::exp(-t * static_cast<double>(N) * static_cast<double>(N)) * mg * mg;
    if (!(tail < 1e-14)) {
        int suggested = static_cast<int>(std::ceil(
                            std::sqrt(std::max(1.0, std::log(mg * mg * 1e14)) / t))) +
                        1;
        throw TruncationError("heat_content_circle: insufficient n_max", suggested);
    }
    Complex s(0.0, 0.0);
    for (int n = -N; n <= N; ++n)
        s += std::exp(-t * static_cast<double>(n) * static_cast<double>(n)) * phi.coeff(n) *
             rho.coeff(-n);
    if (std::abs(s.imag()) >= 1e-10)
        throw Error("heat_content_circle: imaginary residue above 1e-10");
    return s.real();
}

double verify_derivative_identity(const ProfileSpec& f, int n_max, double tol) {
    double at_zero = (f.sing_exponent < 0.0) ? 0.0 : std::abs(f.value(0.0));
    double at_end = std::abs(f.value(f.support));
    if (!(at_zero <= 1e-12) || !(at_end <= 1e-12))
        throw DomainError("verify_derivative_identity: endpoint values must vanish");
    FourierProfile gf = fourier_coefficients(f, n_max, tol);
    FourierProfile gd = fourier_coefficients(f.derivative(), n_max, tol);
    double worst = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
        Complex expect = Complex(0.0, static_cast<double>(n)) * gf.coeff(n);
        worst = std::max(worst, std::abs(gd.coeff(n) - expect));
    }
    return worst;
}

double verify_time_derivative(const ProfileSpec& phi, const ProfileSpec& rho,
                              const std::vector<double>& t_grid, int n_max, double dt,
                              double tol) {
    FourierProfile gphi = fourier_coefficients(phi, n_max, tol);
    FourierProfile gphi2 = fourier_coefficients(phi.second_derivative(), n_max, tol);
    FourierProfile grho = fourier_coefficients(rho, n_max, tol);
    double worst = 0.0;
    for (double t : t_grid) {
        double lhs = heat_content_circle(gphi2, grho, t);
        double fd = (heat_content_circle(gphi, grho, t + dt) -
                     heat_content_circle(gphi, grho, t - dt)) /
                    (2.0 * dt);
        double scale = std::max({std::abs(lhs), std::abs(fd), 1e-30});
        worst = std::max(worst, std::abs(lhs - fd) / scale);
    }
    return worst;
}

} // namespace heatsing
