#include "heatsing/complex_gamma.hpp"
#include "heatsing/errors.hpp"

#include <cmath>

namespace heatsing {

namespace {

// Lanczos coefficients for g = 607/128, N = 15 (Godfrey's set). Good for
// ~1e-13 relative accuracy in double precision on Re(z) >= 0.5.
constexpr double kLanczosG = 4.7421875; // 607/128
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kLogSqrtTwoPi = 0.91893853320467274178032973640562;

// Even Bernoulli numbers B_2..B_14 over 2n, for the digamma tail.
constexpr double kDigammaTail[7] = {
    1.0 / 12.0,   // B_2 / 2
    -1.0 / 120.0, // B_4 / 4
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
};

bool near_nonpositive_integer(Complex z, double tol) {
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol && std::abs(z.imag()) <= tol;
}

void check_pole(Complex z, const char* fn) {
    if (near_nonpositive_integer(z, 1e-14))
        throw PoleError(std::string(fn) + ": argument at non-positive integer");
}

// Lanczos series A_g(z) for Re(z) >= 0.5.
Complex lanczos_sum(Complex z) {
    Complex s(kLanczos[0], 0.0);
    for (int i = 1; i < 15; ++i) s += kLanczos[i] / (z + Complex(i - 1, 0.0));
    return s;
}

Complex gamma_right_half(Complex z) {
    // Gamma(z) = sqrt(2 pi) t^(z-1/2) e^-t A_g(z), t = z + g - 1/2
    Complex t = z + Complex(kLanczosG - 0.5, 0.0);
    return std::exp(kLogSqrtTwoPi + (z - Complex(0.5, 0.0)) * std::log(t) - t) *
           lanczos_sum(z);
}

Complex log_gamma_right_half(Complex z) {
    Complex t = z + Complex(kLanczosG - 0.5, 0.0);
    return Complex(kLogSqrtTwoPi, 0.0) + (z - Complex(0.5, 0.0)) * std::log(t) - t +
           std::log(lanczos_sum(z));
}

} // namespace

Complex sin_pi(Complex z) {
    double n = std::round(z.real());
    Complex f(z.real() - n, z.imag());
    Complex s = std::sin(Complex(M_PI, 0.0) * f);
    return (std::fmod(n, 2.0) == 0.0) ? s : -s;
}

Complex cos_pi(Complex z) {
    double n = std::round(z.real());
    Complex f(z.real() - n, z.imag());
    Complex c = std::cos(Complex(M_PI, 0.0) * f);
    return (std::fmod(n, 2.0) == 0.0) ? c : -c;
}

Complex gamma(Complex z) {
    check_pole(z, "gamma");
    if (z.real() >= 0.5) return gamma_right_half(z);
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    return Complex(M_PI, 0.0) / (sin_pi(z) * gamma_right_half(Complex(1.0, 0.0) - z));
}

Complex log_gamma(Complex z) {
    check_pole(z, "log_gamma");
    if (z.real() >= 0.5) return log_gamma_right_half(z);
    return std::log(Complex(M_PI, 0.0) / sin_pi(z)) -
           log_gamma_right_half(Complex(1.0, 0.0) - z);
}

Complex digamma(Complex z) {
    check_pole(z, "digamma");
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        Complex w = Complex(1.0, 0.0) - z;
        return digamma(w) - Complex(M_PI, 0.0) * cos_pi(z) / sin_pi(z);
    }
    Complex acc(0.0, 0.0);
    while (std::abs(z) < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // asymptotic: psi(z) ~ ln z - 1/(2z) - sum B_2n / (2n z^2n)
    Complex inv2 = 1.0 / (z * z);
    Complex p = inv2;
    Complex tail(0.0, 0.0);
    for (double coeff : kDigammaTail) {
        tail += coeff * p;
        p *= inv2;
    }
    return acc + std::log(z) - 0.5 / z - tail;
}

Complex complex_power(double x, Complex s) {
    if (!(x > 0.0)) throw DomainError("complex_power: base must be positive");
    if (s.imag() == 0.0) {
        if (s.real() == 0.0) return Complex(1.0, 0.0);
        return Complex(std::exp(s.real() * std::log(x)), 0.0);
    }
    return std::exp(s * std::log(x));
}

} // namespace heatsing
