#include "heatsing/spectral.hpp"
#include "heatsing/quadrature.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace heatsing;
using namespace heatsing::test;

namespace {
constexpr double kSqrt2Pi = 2.5066282746310005024157652848110;
}

TEST_CASE("indicator coefficients: closed form vs quadrature") {
    ProfileSpec ind = ProfileSpec::indicator(1.0);
    FourierProfile numeric = fourier_coefficients(ind, 24, 1e-12);
    FourierProfile closed = indicator_coefficients(1.0, 24);
    CHECK(closed.coeff(0).real() == doctest::Approx(1.0 / kSqrt2Pi).epsilon(1e-14));
    for (int n = -24; n <= 24; ++n)
        CHECK(std::abs(numeric.coeff(n) - closed.coeff(n)) < 1e-11);
    // conjugate symmetry for real data
    for (int n = 1; n <= 24; ++n)
        CHECK(std::abs(numeric.coeff(-n) - std::conj(numeric.coeff(n))) < 1e-10);
}

TEST_CASE("power-cutoff coefficient decay (fitted exponent)") {
    CutoffSpec xi = CutoffSpec::smooth_step(1.0 / 3.0, 2.0 / 3.0);
    ProfileSpec f = ProfileSpec::power_cutoff(0.5, xi);
    FourierProfile prof = fourier_coefficients(f, 512, 1e-12);
    // |gamma_n| ~ n^{-1/2} for a = 0.5: fit the log-log slope over the
    // dyadic tail n in [64, 512]
    std::vector<double> xs, ys;
    for (int n = 64; n <= 512; n *= 2) {
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(std::abs(prof.coeff(n))));
    }
    double slope = ols_slope(xs, ys);
    CHECK(std::abs(slope - (-0.5)) < 0.1);
}

TEST_CASE("heat_content_circle basics") {
    FourierProfile ind = indicator_coefficients(1.0, 128);
    // large t: only n = 0 survives: gamma_0^2 = 1/(2 pi)
    double v = heat_content_circle(ind, ind, 30.0);
    CHECK(v == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-9));
    // symmetry under swapping the roles (real data)
    CutoffSpec xi = CutoffSpec::smooth_step(0.25, 0.45);
    FourierProfile f = fourier_coefficients(ProfileSpec::power_cutoff(0.3, xi), 128, 1e-12);
    CHECK(heat_content_circle(ind, f, 0.02) ==
          doctest::Approx(heat_content_circle(f, ind, 0.02)).epsilon(1e-12));
    // truncation guard
    CHECK_THROWS_AS(heat_content_circle(ind, ind, 1e-4), TruncationError);
    try {
        heat_content_circle(ind, ind, 1e-4);
    } catch (const TruncationError& e) {
        CHECK(e.suggested_n_max > 128);
    }
}

TEST_CASE("circle matches the line content up to exponentially small error") {
    // [0,1] inside the 2 pi circle: wrap distance 2 pi - 1, so the two
    // values agree to far below the quadrature floor at these t
    FourierProfile ind = indicator_coefficients(1.0, 512);
    for (double t : {0.02, 0.01}) {
        double circle = heat_content_circle(ind, ind, t);
        double line = heat_content_interval(ParamPair(0.0, 0.0), t, std::nullopt, 1e-12).value;
        CHECK(std::abs(circle - line) < 1e-10);
    }
}

TEST_CASE("coefficient derivative identity") {
    // smooth bridge x(1-x): clean case
    CHECK(verify_derivative_identity(ProfileSpec::poly_bridge(1, 1), 64, 1e-12) < 1e-9);
    // x^{0.5} Xi (a = -1/2): singular-derivative case
    CutoffSpec xi = CutoffSpec::smooth_step(0.25, 0.45);
    ProfileSpec f = ProfileSpec::power_cutoff(-0.5, xi);
    CHECK(verify_derivative_identity(f, 64, 1e-12) < 1e-8);
    // n = 0 coefficient of f' vanishes (fundamental theorem)
    FourierProfile gd = fourier_coefficients(f.derivative(), 4, 1e-12);
    CHECK(std::abs(gd.coeff(0)) < 1e-10);
    // endpoint violation rejected
    CHECK_THROWS_AS(verify_derivative_identity(ProfileSpec::indicator(1.0), 8), DomainError);
}

TEST_CASE("time derivative identity") {
    ProfileSpec phi = ProfileSpec::poly_bridge(2, 2);
    ProfileSpec rho = ProfileSpec::indicator(1.0);
    double dev = verify_time_derivative(phi, rho, {0.01}, 96, 1e-5, 1e-12);
    CHECK(dev < 1e-6);
    // the x^{1.5} Xi case (a = -3/2)
    CutoffSpec xi = CutoffSpec::smooth_step(0.25, 0.45);
    ProfileSpec phi2 = ProfileSpec::power_cutoff(-1.5, xi);
    double dev2 = verify_time_derivative(phi2, rho, {0.01}, 96, 1e-5, 1e-12);
    CHECK(dev2 < 1e-5);
    // linearity: scaling phi scales beta linearly
    FourierProfile g1 = fourier_coefficients(phi, 64, 1e-12);
    FourierProfile g3 = g1;
    for (auto& c : g3.gamma) c *= 3.0;
    FourierProfile gr = fourier_coefficients(rho, 64, 1e-12);
    CHECK(heat_content_circle(g3, gr, 0.05) ==
          doctest::Approx(3.0 * heat_content_circle(g1, gr, 0.05)).epsilon(1e-13));
}

TEST_CASE("Parseval undershoot") {
    for (double a : {0.0, -0.5}) {
        CutoffSpec xi = CutoffSpec::smooth_step(0.25, 0.45);
        ProfileSpec f = (a == 0.0) ? ProfileSpec::indicator(1.0)
                                   : ProfileSpec::power_cutoff(a, xi);
        FourierProfile prof = (a == 0.0) ? indicator_coefficients(1.0, 256)
                                         : fourier_coefficients(f, 256, 1e-12);
        double sum = 0.0;
        for (int n = -256; n <= 256; ++n) sum += std::norm(prof.coeff(n));
        QuadResult l2 = tanh_sinh(
            [&](double x, double dl, double) {
                double v = (a == 0.0) ? 1.0 : std::pow(dl, -a) * xi.value(x);
                return v * v;
            },
            0.0, 1.0);
        CHECK(sum <= l2.value + 1e-12);
    }
}

TEST_CASE("exponential circle-line closeness with a measurable gap") {
    // constant data on [0, 2 pi - 1/sqrt(2)]: wrap gap 1/sqrt(2) makes the
    // true decay exactly exp(-1/(8t)); slope fitted against 1/t
    const double len = 2.0 * M_PI - 1.0 / std::sqrt(2.0);
    FourierProfile prof = indicator_coefficients(len, 256);
    std::vector<double> xs, ys;
    for (double t : {0.02, 0.01, 0.005}) {
        double circle = heat_content_circle(prof, prof, t);
        double line = erf_oracle_constant_content(len, t);
        double d = std::abs(circle - line);
        if (d > 1e-14) {
            xs.push_back(1.0 / t);
            ys.push_back(std::log(d));
        }
    }
    REQUIRE(xs.size() >= 2);
    CHECK(ols_slope(xs, ys) <= -0.125);
}
