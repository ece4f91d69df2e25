#pragma once

#include "heatsing/errors.hpp"

#include <cmath>

namespace heatsing {

// Smooth monotone cutoff: identically 1 on [0, plateau_end], identically 0
// on [support_end, inf), C-infinity in between (exponential bump joins).
struct CutoffSpec {
    enum class Kind { None, SmoothStep };
    Kind kind = Kind::SmoothStep;
    double plateau_end = 1.0 / 3.0;
    double support_end = 2.0 / 3.0;

    static CutoffSpec none() { return {Kind::None, 0.0, 0.0}; }
    static CutoffSpec smooth_step(double plateau, double support) {
        if (!(0.0 < plateau && plateau < support))
            throw DomainError("CutoffSpec: need 0 < plateau_end < support_end");
        return {Kind::SmoothStep, plateau, support};
    }

    double operator()(double x) const { return value(x); }

    double value(double x) const {
        if (kind == Kind::None) return 1.0;
        if (x <= plateau_end) return 1.0;
        if (x >= support_end) return 0.0;
        double u = (support_end - x) / (support_end - plateau_end);
        return step(u);
    }

    double deriv(double x) const {
        if (kind == Kind::None) return 0.0;
        if (x <= plateau_end || x >= support_end) return 0.0;
        double L = support_end - plateau_end;
        double u = (support_end - x) / L;
        return -step_d1(u) / L;
    }

    double deriv2(double x) const {
        if (kind == Kind::None) return 0.0;
        if (x <= plateau_end || x >= support_end) return 0.0;
        double L = support_end - plateau_end;
        double u = (support_end - x) / L;
        return step_d2(u) / (L * L);
    }

  private:
    // S(u) = f(u) / (f(u) + f(1-u)), f(u) = exp(-1/u); S(0)=0, S(1)=1.
    static double bump(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }
    static double bump_d1(double u) { return u > 0.0 ? bump(u) / (u * u) : 0.0; }
    static double bump_d2(double u) {
        if (u <= 0.0) return 0.0;
        double f = bump(u);
        return f * (1.0 / (u * u * u * u) - 2.0 / (u * u * u));
    }
    static double step(double u) {
        double f = bump(u), g = bump(1.0 - u);
        return f / (f + g);
    }
    static double step_d1(double u) {
        double f = bump(u), g = bump(1.0 - u);
        double fd = bump_d1(u), gd = -bump_d1(1.0 - u);
        double D = f + g;
        return (fd * D - f * (fd + gd)) / (D * D);
    }
    static double step_d2(double u) {
        double f = bump(u), g = bump(1.0 - u);
        double fd = bump_d1(u), gd = -bump_d1(1.0 - u);
        double fdd = bump_d2(u), gdd = bump_d2(1.0 - u);
        double D = f + g, Dd = fd + gd, Ddd = fdd + gdd;
        double num = fdd * D - f * Ddd;
        return num / (D * D) - 2.0 * Dd * (fd * D - f * Dd) / (D * D * D);
    }
};

} // namespace heatsing
