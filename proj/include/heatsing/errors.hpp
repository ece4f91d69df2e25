#pragma once

#include <stdexcept>
#include <string>

namespace heatsing {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument hit a gamma/digamma pole (non-positive integer within tolerance).
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

// Input outside the operation's contract (exponent >= 1, t <= 0, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Parameter pair sits on a log plane a+b = 1-2k where the requested
// closed form has a genuine pole.
struct LogPlaneError : Error {
    explicit LogPlaneError(const std::string& what) : Error(what) {}
};

// Parameter pair is outside the strip O_k required by the operation.
struct RegionError : Error {
    explicit RegionError(const std::string& what) : Error(what) {}
};

// Quadrature failed to reach the requested tolerance at maximum depth.
struct MaxRefinementError : Error {
    MaxRefinementError(const std::string& what, double achieved)
        : Error(what), achieved_error(achieved) {}
    double achieved_error;
};

// Fourier truncation insufficient for the requested time.
struct TruncationError : Error {
    TruncationError(const std::string& what, int suggested)
        : Error(what), suggested_n_max(suggested) {}
    int suggested_n_max;
};

// An exact division in the regularization ladder left a nonzero remainder.
// This is a falsification signal, never recovered from.
struct DivisionNotExactError : Error {
    DivisionNotExactError(const std::string& step_, const std::string& what)
        : Error("division not exact at step " + step_ + ": " + what), step(step_) {}
    std::string step;
};

} // namespace heatsing
