#pragma once

// Test-only oracles, independent of the library's evaluation paths.

#include "heatsing/complex_gamma.hpp"
#include "heatsing/params.hpp"

#include <cmath>
#include <random>

namespace heatsing::test {

// Closed form for constant data on [0, len] from the error-function
// antiderivative: len erf(r) - sqrt(4t/pi)(1 - e^{-r^2}), r = len/sqrt(4t).
inline double erf_oracle_constant_content(double len, double t) {
    double r = len / std::sqrt(4.0 * t);
    return len * std::erf(r) - std::sqrt(4.0 * t / M_PI) * (1.0 - std::exp(-r * r));
}

// Random parameter pairs inside O, bounded away from the excluded sums.
inline ParamPair random_pair_in_O(std::mt19937& rng, double margin = 0.05) {
    std::uniform_real_distribution<double> dist(-2.5, 0.95);
    for (;;) {
        double a = dist(rng), b = dist(rng);
        double s = a + b;
        bool clear = true;
        for (int m = -1; m <= 6; ++m) {
            if (std::abs(s - (1.0 - 2.0 * m)) < margin) clear = false;
        }
        if (clear) return ParamPair(a, b);
    }
}

// Simple ordinary least squares slope of y against x.
inline double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= x.size();
    my /= y.size();
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

} // namespace heatsing::test
