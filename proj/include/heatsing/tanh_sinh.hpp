#pragma once

#include <cstdint>
#include <functional>

namespace heatsing {

// Result of one quadrature evaluation. error_estimate comes from the
// difference between the last two refinement levels of the nested rule.
struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long nodes_used = 0;
    bool converged = true;
};

struct QuadOptions {
    double tol = 1e-11; // absolute
    int min_level = 4;
    int max_level = 12;
};

// Integrand callback. Receives the abscissa plus its distances to the two
// interval endpoints, computed without cancellation so endpoint-singular
// factors like dist_lo^{-a} stay accurate at 1e-300 scales.
using Integrand = std::function<double(double x, double dist_lo, double dist_hi)>;

// Nested tanh-sinh (double-exponential) rule on (lo, hi). Handles
// integrable endpoint singularities; nodes whose endpoint distance
// underflows are skipped (their exact contribution is below 1e-28 for any
// integrable power singularity). Never throws on non-convergence: the
// returned QuadResult carries converged = false and the achieved error.
QuadResult tanh_sinh(const Integrand& f, double lo, double hi, const QuadOptions& opt = {});

// Convenience overload for integrands that do not need endpoint distances.
QuadResult tanh_sinh_plain(const std::function<double(double)>& f, double lo, double hi,
                           const QuadOptions& opt = {});

} // namespace heatsing
