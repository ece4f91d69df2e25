#pragma once

#include <complex>

namespace heatsing {

using Complex = std::complex<double>;

// sin(pi z), cos(pi z) with argument reduction on the real part, so the
// result stays accurate when Re(z) is large or close to an integer.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

// Gamma function for complex argument, Lanczos approximation with
// reflection for Re(z) < 0.5. Throws PoleError within 1e-14 of a
// non-positive integer.
Complex gamma(Complex z);

// log Gamma, continuous along rays with Re(z) > 0; exp(log_gamma(z))
// reproduces gamma(z).
Complex log_gamma(Complex z);

// Digamma (logarithmic derivative of Gamma).
Complex digamma(Complex z);

// x^s for real x > 0: exp(s log x) with the real logarithm. Real s gives
// an exactly real result.
Complex complex_power(double x, Complex s);

} // namespace heatsing
