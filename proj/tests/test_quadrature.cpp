#include "heatsing/quadrature.hpp"
#include "heatsing/coefficients.hpp"
#include "heatsing/asymptotics.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace heatsing;
using namespace heatsing::test;

TEST_CASE("kernel_line pointwise and normalization") {
    double t = 1.0 / (4.0 * M_PI);
    CHECK(kernel_line(0.0, 0.0, t) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(kernel_line(1.0, 0.0, 0.1) ==
          doctest::Approx(std::exp(-1.0 / 0.4) / std::sqrt(0.4 * M_PI)).epsilon(1e-15));
    // integral over the line is 1
    QuadResult q = tanh_sinh_plain([&](double x) { return kernel_line(x, 0.0, 0.05); },
                                   -3.0, 3.0);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(kernel_line(0.0, 0.0, 0.0), DomainError);
}

TEST_CASE("tanh_sinh handles endpoint power singularities") {
    // int_0^1 x^{-0.9} = 10 with a hard singularity
    QuadResult q = tanh_sinh([](double, double dl, double) { return std::pow(dl, -0.9); },
                             0.0, 1.0);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(10.0).epsilon(1e-11));
    // int_0^1 (1-x)^{-1/2} = 2 at the right endpoint
    QuadResult q2 = tanh_sinh([](double, double, double dr) { return 1.0 / std::sqrt(dr); },
                              0.0, 1.0);
    CHECK(q2.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("heat content for constant data matches the erf oracle") {
    ParamPair p(0.0, 0.0);
    for (double t : {1e-2, 1e-4, 1e-6}) {
        QuadResult q = heat_content_interval(p, t, std::nullopt, 1e-12);
        double expected = erf_oracle_constant_content(1.0, t);
        CHECK(q.value == doctest::Approx(expected).epsilon(1e-10));
        CHECK(std::abs(q.value - expected) <= 20.0 * std::max(q.error_estimate, 1e-14));
    }
    QuadResult q = heat_content_interval(p, 1e-4, std::nullopt, 1e-12);
    CHECK(q.value == doctest::Approx(1.0 - 2.0 * std::sqrt(1e-4 / M_PI)).epsilon(1e-10));
}

TEST_CASE("heat content symmetry in (a, b)") {
    for (auto [a, b] : {std::pair{0.5, -0.3}, std::pair{0.9, -0.2}}) {
        QuadResult q1 = heat_content_interval(ParamPair(a, b), 1e-3);
        QuadResult q2 = heat_content_interval(ParamPair(b, a), 1e-3);
        CHECK(std::abs(q1.value - q2.value) < 1e-11);
    }
}

TEST_CASE("heat content monotone decreasing in t for constant data") {
    ParamPair p(0.0, 0.0);
    double prev = 2.0;
    for (int i = 0; i < 10; ++i) {
        double t = std::pow(10.0, -6.0 + 0.5 * i);
        double v = heat_content_interval(p, t).value;
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("heat content positivity and quadrant domination") {
    for (auto [a, b] : {std::pair{0.5, 0.3}, std::pair{0.0, 0.7}}) {
        double t = 1e-3;
        double h = heat_content_interval(ParamPair(a, b), t).value;
        double qc = quadrant_correction(ParamPair(a, b), t).value;
        CHECK(h > 0.0);
        CHECK(qc > 0.0);
        CHECK(qc < h); // kernel domination for a, b >= 0
    }
}

TEST_CASE("refinement convergence contract") {
    ParamPair p(0.5, -0.3);
    double t = 1e-3;
    QuadResult loose = heat_content_interval(p, t, std::nullopt, 1e-8);
    QuadResult tight = heat_content_interval(p, t, std::nullopt, 5e-9);
    CHECK(std::abs(loose.value - tight.value) <= std::max(loose.error_estimate, 1e-14));
}

TEST_CASE("domain contract violations") {
    CHECK_THROWS_AS(heat_content_interval(ParamPair(0.3, 0.4), 1e-8), DomainError);
    CHECK_THROWS_AS(heat_content_interval(ParamPair(0.3, 0.4), 2.0), DomainError);
    CHECK_THROWS_AS(
        heat_content_interval(ParamPair(Complex(0.1, 0.2), Complex(0.1, 0.0)), 1e-3),
        DomainError);
    CHECK_THROWS_AS(quadrant_correction(ParamPair(0.3, 0.4), 0.0), DomainError);
}

TEST_CASE("series consistency at (0.5, 0.5)") {
    // (0.5, 0.5) sits on the a+b = 1 log plane, so the applicable series
    // is the log-plane expansion; agreement through n = 4 within the
    // next-order term
    ParamPair p(0.5, 0.5);
    CHECK_THROWS_AS(c_boundary(p), LogPlaneError);
    double t = 1e-3;
    double h = heat_content_interval(p, t, std::nullopt, 1e-12).value;
    AsymptoticSeries s = series_logplane_k0(0.5, 4);
    double next_term = std::abs(c_n(5, ParamPair(0.5, 0.5)).real()) * std::pow(t, 2.5);
    CHECK(std::abs(h - s.eval(t)) < 3.0 * next_term + 1e-11);
}

TEST_CASE("quadrant correction scaling law") {
    ParamPair p(0.3, -0.4);
    double power = (1.0 - p.sum().real()) / 2.0;
    double expected = bc_correction_coefficient(p).real();
    for (double t : {1e-3, 1e-4}) {
        QuadResult q = quadrant_correction(p, t, 1e-12);
        CHECK(q.value / std::pow(t, power) == doctest::Approx(expected).epsilon(1e-6));
    }
    // (0,0): sqrt(t/pi) up to exponentially small corrections
    QuadResult q = quadrant_correction(ParamPair(0.0, 0.0), 1e-3, 1e-12);
    CHECK(q.value == doctest::Approx(std::sqrt(1e-3 / M_PI)).epsilon(1e-9));
    // symmetry
    QuadResult qa = quadrant_correction(ParamPair(0.3, -0.4), 1e-3);
    QuadResult qb = quadrant_correction(ParamPair(-0.4, 0.3), 1e-3);
    CHECK(std::abs(qa.value - qb.value) < 1e-12);
}

TEST_CASE("c_k integral: half-line identity and strip overlap") {
    // k = -1 equals the closed form directly
    QuadResult q = c_k_integral(-1, ParamPair(0.8, 0.7), 1e-11);
    CHECK(q.value == doctest::Approx(c_boundary(ParamPair(0.8, 0.7)).real()).epsilon(1e-9));

    // strip overlap: patched values agree across k and equal c(a, b)
    {
        ParamPair p(-0.2, -0.3);
        double v0 = c_k_integral(0, p).value;
        double v1 = c_k_integral(1, p).value;
        CHECK(std::abs(v0 - v1) < 1e-8);
        CHECK(v0 == doctest::Approx(c_boundary(p).real()).epsilon(1e-8));
    }
    {
        ParamPair p(-1.5, -0.8);
        double v1 = c_k_integral(1, p).value;
        double v2 = c_k_integral(2, p).value;
        CHECK(std::abs(v1 - v2) < 1e-8);
    }
    // region guard
    CHECK_THROWS_AS(c_k_integral(1, ParamPair(0.3, 0.4)), RegionError);
    CHECK_THROWS_AS(c_k_integral(-1, ParamPair(0.3, 0.4)), RegionError);
}

TEST_CASE("c_k integral: divergence rate toward the a+b = 1 plane") {
    // (a+b-1) c_{-1}(a, b) -> -X(a, 1-a) = 1 as a+b -> 1+
    std::vector<double> svals = {0.1, 0.05, 0.025};
    std::vector<double> prods;
    for (double s : svals) {
        ParamPair p(0.6 + s, 0.4);
        double v = c_k_integral(-1, p).value;
        prods.push_back(s * v);
    }
    // Richardson extrapolation in s
    double lim = prods[2] + (prods[2] - prods[1]);
    CHECK(lim == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(prods[2] - 1.0) < std::abs(prods[0] - 1.0));
}

TEST_CASE("shifted pair difference consistency at benign parameters") {
    ParamPair p(0.5, 0.3);
    double t = 5e-3;
    double direct = heat_content_interval(ParamPair(-1.5, 0.3), t, std::nullopt, 1e-12).value -
                    heat_content_interval(ParamPair(-0.5, -0.7), t, std::nullopt, 1e-12).value;
    QuadResult comb = shifted_pair_difference(p, t, 1e-12);
    CHECK(comb.value == doctest::Approx(direct).epsilon(1e-7));
}
