#pragma once

#include "heatsing/complex_gamma.hpp"
#include "heatsing/errors.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace heatsing {

// Region classification of an exponent pair. The admissible parameter
// domain is Re(a) < 1, Re(b) < 1; inside it, a + b = 1 - 2k (real, k >= 0)
// are the log planes where the t^{(1-a-b)/2} closed forms degenerate.
struct RegionTag {
    enum class Kind { InO, LogPlane, Invalid };
    Kind kind = Kind::Invalid;
    int log_k = -1; // valid when kind == LogPlane
    // strip memberships: all k in [-1, 3] whose strip O_k contains the pair
    std::vector<int> strip_memberships;
};

class ParamPair {
  public:
    ParamPair(Complex a, Complex b) : a_(a), b_(b) {
        if (!(a.real() < 1.0) || !(b.real() < 1.0))
            throw DomainError("ParamPair: requires Re(a) < 1 and Re(b) < 1");
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
            !std::isfinite(b.real()) || !std::isfinite(b.imag()))
            throw DomainError("ParamPair: non-finite component");
    }
    ParamPair(double a, double b) : ParamPair(Complex(a, 0.0), Complex(b, 0.0)) {}

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Complex sum() const { return a_ + b_; }
    bool is_real() const { return a_.imag() == 0.0 && b_.imag() == 0.0; }
    double ra() const { return a_.real(); }
    double rb() const { return b_.real(); }

    // Log plane index if a+b = 1-2k within tol and both entries are real.
    std::optional<int> log_plane(double tol = 1e-12) const {
        if (std::abs(a_.imag()) > tol || std::abs(b_.imag()) > tol) return std::nullopt;
        double s = a_.real() + b_.real();
        double kf = (1.0 - s) / 2.0;
        double kr = std::round(kf);
        if (kr >= 0.0 && std::abs(s - (1.0 - 2.0 * kr)) <= tol)
            return static_cast<int>(kr);
        return std::nullopt;
    }

    // True when a+b sits within tol of any excluded value 1, -1, -3, ...
    // (for complex pairs this still disqualifies membership in O).
    bool near_excluded_sum(double tol = 1e-12) const {
        Complex s = sum();
        if (std::abs(s.imag()) > tol) return false;
        double kf = (1.0 - s.real()) / 2.0;
        double kr = std::round(kf);
        return kr >= 0.0 && std::abs(s.real() - (1.0 - 2.0 * kr)) <= tol;
    }

    RegionTag region(double tol = 1e-12) const {
        RegionTag tag;
        if (auto k = log_plane(tol)) {
            tag.kind = RegionTag::Kind::LogPlane;
            tag.log_k = *k;
        } else if (near_excluded_sum(tol)) {
            tag.kind = RegionTag::Kind::Invalid; // excluded sum, complex entries
        } else {
            tag.kind = RegionTag::Kind::InO;
        }
        for (int k = -1; k <= 3; ++k)
            if (in_strip(k, tol)) tag.strip_memberships.push_back(k);
        return tag;
    }

    // Strip O_k membership: O_-1: 1 < Re(a+b) < 2; O_0: -1 < Re(a+b) < 1;
    // O_k (k>=1): -2k-1 < Re(a+b) < 1-k, excluding a+b = -1, ..., -2k+1.
    bool in_strip(int k, double tol = 1e-12) const {
        double s = sum().real();
        auto excluded = [&](int lo, int hi) {
            if (std::abs(sum().imag()) > tol) return false;
            for (int m = lo; m <= hi; ++m)
                if (std::abs(s + static_cast<double>(m)) <= tol) return true;
            return false;
        };
        switch (k) {
            case -1: return 1.0 < s && s < 2.0;
            case 0: return -1.0 < s && s < 1.0;
            case 1: return -3.0 < s && s < 0.0 && !excluded(1, 1);
            case 2: return -5.0 < s && s < -1.0 && !excluded(1, 3);
            case 3: return -7.0 < s && s < -2.0 && !excluded(1, 5);
            default: return false;
        }
    }

  private:
    Complex a_, b_;
};

} // namespace heatsing
