#include "heatsing/formal_series.hpp"
#include "heatsing/errors.hpp"

#include <algorithm>

namespace heatsing {

FormalSeries FormalSeries::eta_power(int cs, long c0, int T) {
    // binomial recursion: B_0 = 1, B_n = B_{n-1} (c - n + 1) / n
    std::vector<RationalPoly> out;
    out.reserve(T + 1);
    RationalPoly c = RationalPoly::var_a() * Rational(cs) + RationalPoly(Rational(c0));
    RationalPoly cur(Rational(1));
    out.push_back(cur);
    for (int n = 1; n <= T; ++n) {
        cur = cur * (c - RationalPoly(Rational(n - 1)));
        cur = cur * Rational(1, n);
        out.push_back(cur);
    }
    return FormalSeries(std::move(out));
}

FormalSeries FormalSeries::eta_power_sum(int T) {
    std::vector<RationalPoly> out;
    out.reserve(T + 1);
    RationalPoly s = RationalPoly::var_a();
    RationalPoly p = RationalPoly::var_b();
    RationalPoly t = RationalPoly::constant(2); // theta_0(a) + theta_0(b)
    RationalPoly r = s;                         // a theta_0(a) + b theta_0(b)
    Rational nfact(1);
    for (int n = 0; n <= T; ++n) {
        if (n > 0) nfact *= n;
        Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
        out.push_back(t * (sign / nfact));
        RationalPoly t_next = r + t * Rational(n);
        RationalPoly r_next = s * r - p * t + r * Rational(n);
        t = std::move(t_next);
        r = std::move(r_next);
    }
    return FormalSeries(std::move(out));
}

FormalSeries FormalSeries::operator-(const FormalSeries& o) const {
    size_t n = std::min(c_.size(), o.c_.size());
    std::vector<RationalPoly> out(c_.begin(), c_.begin() + n);
    for (size_t i = 0; i < n; ++i) out[i] -= o.c_[i];
    return FormalSeries(std::move(out));
}

FormalSeries FormalSeries::operator+(const FormalSeries& o) const {
    size_t n = std::min(c_.size(), o.c_.size());
    std::vector<RationalPoly> out(c_.begin(), c_.begin() + n);
    for (size_t i = 0; i < n; ++i) out[i] += o.c_[i];
    return FormalSeries(std::move(out));
}

FormalSeries FormalSeries::scaled(const RationalPoly& f) const {
    std::vector<RationalPoly> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c * f);
    return FormalSeries(std::move(out));
}

FormalSeries FormalSeries::scaled(const Rational& f) const {
    std::vector<RationalPoly> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c * f);
    return FormalSeries(std::move(out));
}

FormalSeries FormalSeries::shift_w2(const std::string& step) const {
    if (c_.size() < 3)
        throw DivisionNotExactError(step, "series too short for w^2 division");
    if (!c_[0].is_zero())
        throw DivisionNotExactError(step, "w^0 coefficient nonzero: " + c_[0].str());
    if (!c_[1].is_zero())
        throw DivisionNotExactError(step, "w^1 coefficient nonzero: " + c_[1].str());
    return FormalSeries(std::vector<RationalPoly>(c_.begin() + 2, c_.end()));
}

FormalSeries FormalSeries::divide_linear(const Rational& alpha, const Rational& beta,
                                         const Rational& gamma,
                                         const std::string& step) const {
    std::vector<RationalPoly> out;
    out.reserve(c_.size());
    for (size_t n = 0; n < c_.size(); ++n)
        out.push_back(c_[n].divide_exact_linear(alpha, beta, gamma,
                                                step + " [w^" + std::to_string(n) + "]"));
    return FormalSeries(std::move(out));
}

} // namespace heatsing
