#include "heatsing/rational_poly.hpp"
#include "heatsing/errors.hpp"

#include <sstream>

namespace heatsing {

void RationalPoly::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    RationalPoly r = *this;
    r += o;
    return r;
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    RationalPoly r = *this;
    r -= o;
    return r;
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    RationalPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term({m1.first + m2.first, m1.second + m2.second}, c1 * c2);
    return r;
}

RationalPoly RationalPoly::operator*(const Rational& c) const {
    RationalPoly r;
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_[m] = coeff * c;
    return r;
}

std::complex<double> RationalPoly::eval(std::complex<double> a, std::complex<double> b) const {
    std::complex<double> s(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
        std::complex<double> t(static_cast<double>(c), 0.0);
        for (int i = 0; i < m.first; ++i) t *= a;
        for (int j = 0; j < m.second; ++j) t *= b;
        s += t;
    }
    return s;
}

double RationalPoly::eval(double a, double b) const {
    double s = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = static_cast<double>(c);
        for (int i = 0; i < m.first; ++i) t *= a;
        for (int j = 0; j < m.second; ++j) t *= b;
        s += t;
    }
    return s;
}

Rational RationalPoly::eval_exact(const Rational& a, const Rational& b) const {
    Rational s = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < m.first; ++i) t *= a;
        for (int j = 0; j < m.second; ++j) t *= b;
        s += t;
    }
    return s;
}

int RationalPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        d = std::max(d, m.first + m.second);
    }
    return d;
}

std::string RationalPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (m.first) os << "*a^" << m.first;
        if (m.second) os << "*b^" << m.second;
    }
    return os.str();
}

RationalPoly RationalPoly::divide_exact_linear(const Rational& alpha, const Rational& beta,
                                               const Rational& gamma,
                                               const std::string& step) const {
    // Divide by alpha*a + beta*b + gamma. Eliminate the variable with a
    // nonzero leading coefficient by repeated cancellation of the highest
    // monomial in that variable; what cannot be cancelled is the remainder.
    const bool use_a = (alpha != 0);
    if (!use_a && beta == 0)
        throw DivisionNotExactError(step, "divisor is not linear in a or b");
    const Rational& lead = use_a ? alpha : beta;

    RationalPoly rem = *this;
    RationalPoly quot;
    while (!rem.terms_.empty()) {
        // highest monomial in the elimination variable (map is lex on
        // (deg_a, deg_b); for elimination in b pick max deg_b instead)
        auto pick = rem.terms_.end();
        int best = -1;
        for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it) {
            int d = use_a ? it->first.first : it->first.second;
            if (d > best || (d == best && pick == rem.terms_.end())) {
                best = d;
                pick = it;
            }
        }
        if (best < 1) break; // nothing left containing the variable
        Monomial qm = pick->first;
        if (use_a)
            qm.first -= 1;
        else
            qm.second -= 1;
        Rational qc = pick->second / lead;
        quot.add_term(qm, qc);
        // subtract qc * qm * (alpha a + beta b + gamma)
        RationalPoly sub;
        if (alpha != 0) sub.add_term({qm.first + 1, qm.second}, qc * alpha);
        if (beta != 0) sub.add_term({qm.first, qm.second + 1}, qc * beta);
        if (gamma != 0) sub.add_term(qm, qc * gamma);
        rem -= sub;
    }
    if (!rem.terms_.empty()) {
        // degenerate case: remainder free of the variable but maybe the
        // divisor is a pure constant multiple; otherwise not exact
        throw DivisionNotExactError(step, "remainder " + rem.str());
    }
    return quot;
}

RationalPoly theta_poly(int n, bool in_a) {
    RationalPoly p(Rational(1));
    RationalPoly x = in_a ? RationalPoly::var_a() : RationalPoly::var_b();
    for (int i = 0; i < n; ++i) p = p * (x + RationalPoly(Rational(i)));
    return p;
}

} // namespace heatsing
