#include "heatsing/ladder.hpp"
#include "heatsing/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <mutex>
#include <ostream>
#include <sstream>

namespace heatsing {

namespace {

// --- exact rational functions over the fraction field (cross-check path) ---

struct PolyRatio {
    RationalPoly num;
    RationalPoly den = RationalPoly(Rational(1));

    bool is_zero() const { return num.is_zero(); }
    PolyRatio operator+(const PolyRatio& o) const {
        return {num * o.den + o.num * den, den * o.den};
    }
    PolyRatio operator-(const PolyRatio& o) const {
        return {num * o.den - o.num * den, den * o.den};
    }
    PolyRatio operator*(const PolyRatio& o) const { return {num * o.num, den * o.den}; }
    PolyRatio operator/(const PolyRatio& o) const {
        if (o.num.is_zero()) throw Error("PolyRatio: division by zero");
        return {num * o.den, den * o.num};
    }
    bool equals(const PolyRatio& o) const { return (num * o.den - o.num * den).is_zero(); }
};

PolyRatio ratio_of(RationalPoly p) { return {std::move(p), RationalPoly(Rational(1))}; }

// A_l w-series coefficient n: binom(l, n) + binom(-s-l, n), poly in s.
RationalPoly a_basis_coeff(int l, int n) {
    static std::map<std::pair<int, int>, RationalPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(l, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    FormalSeries s = FormalSeries::eta_power(0, l, n) + FormalSeries::eta_power(-1, -l, n);
    cache[key] = s[n];
    return s[n];
}

// Solve the exact overdetermined system sum_l sigma_l A_l[n] = P[n],
// n = 0..2k+1, by row-pivoted elimination over the fraction field; then
// verify every remaining equation. Returns sigma as PolyRatio.
std::vector<PolyRatio> solve_sigma_exact(int k, const FormalSeries& P) {
    int ncols = k + 1;
    int nrows = 2 * k + 2;
    std::vector<std::vector<PolyRatio>> M(nrows, std::vector<PolyRatio>(ncols + 1));
    for (int n = 0; n < nrows; ++n) {
        for (int l = 0; l < ncols; ++l) M[n][l] = ratio_of(a_basis_coeff(l, n));
        M[n][ncols] = ratio_of(P[n]);
    }
    std::vector<int> pivot_rows;
    std::vector<bool> used(nrows, false);
    for (int col = 0; col < ncols; ++col) {
        int pr = -1;
        for (int r = 0; r < nrows; ++r) {
            if (!used[r] && !M[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) throw Error("sigma solve: structurally singular system");
        used[pr] = true;
        pivot_rows.push_back(pr);
        for (int r = 0; r < nrows; ++r) {
            if (r == pr || M[r][col].is_zero()) continue;
            PolyRatio f = M[r][col] / M[pr][col];
            for (int c = col; c <= ncols; ++c) M[r][c] = M[r][c] - f * M[pr][c];
        }
    }
    // back-substitute (system is now diagonal on the pivot rows)
    std::vector<PolyRatio> sigma(ncols);
    for (int col = 0; col < ncols; ++col) {
        int pr = pivot_rows[col];
        sigma[col] = M[pr][ncols] / M[pr][col];
    }
    // every non-pivot row must have reduced to 0 = 0
    for (int r = 0; r < nrows; ++r) {
        if (used[r]) continue;
        if (!M[r][ncols].is_zero())
            throw DivisionNotExactError("sigma solve k=" + std::to_string(k),
                                        "overdetermined equations inconsistent");
    }
    return sigma;
}

// --- sigma entries with factored denominators (chain path) ---

SigmaEntry entry_zero() { return {}; }

SigmaEntry entry_const(Rational c) {
    SigmaEntry e;
    e.num = RationalPoly(std::move(c));
    return e;
}

SigmaEntry entry_div_factor(const SigmaEntry& e, int m) {
    SigmaEntry r = e;
    r.den_factors[m] += 1;
    return r;
}

SigmaEntry entry_scale_rat(const SigmaEntry& e, const Rational& c) {
    SigmaEntry r = e;
    // fold the rational into num (keeps den_scale a plain positive unit)
    r.num = e.num * c;
    return r;
}

RationalPoly factor_poly(int m) {
    // (m + s)
    return RationalPoly(Rational(m)) + RationalPoly::var_a();
}

SigmaEntry entry_add(const SigmaEntry& x, const SigmaEntry& y) {
    SigmaEntry r;
    for (const auto& [m, e] : x.den_factors) r.den_factors[m] = e;
    for (const auto& [m, e] : y.den_factors)
        r.den_factors[m] = std::max(r.den_factors.count(m) ? r.den_factors[m] : 0, e);
    auto complement = [&](const SigmaEntry& z) {
        RationalPoly mult(Rational(1));
        for (const auto& [m, e] : r.den_factors) {
            int have = z.den_factors.count(m) ? z.den_factors.at(m) : 0;
            for (int i = have; i < e; ++i) mult = mult * factor_poly(m);
        }
        return mult;
    };
    r.num = x.num * complement(x) + y.num * complement(y);
    r.den_scale = 1;
    return r;
}

using AVec = std::vector<SigmaEntry>; // coefficients over the A-basis

AVec avec_zero(int n) { return AVec(n); }

AVec avec_add(const AVec& x, const AVec& y) {
    AVec r(std::max(x.size(), y.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        SigmaEntry xi = i < x.size() ? x[i] : entry_zero();
        SigmaEntry yi = i < y.size() ? y[i] : entry_zero();
        r[i] = entry_add(xi, yi);
    }
    return r;
}

AVec avec_scale(const AVec& x, const SigmaEntry& f) {
    AVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        r[i] = x[i];
        r[i].num = x[i].num * f.num;
        for (const auto& [m, e] : f.den_factors) r[i].den_factors[m] += e;
    }
    return r;
}

// w^2 B_i over the A-basis: -2 (A_i - A_{i+1}) / (2i+1+s)
AVec avec_w2B(int i, int n) {
    AVec v = avec_zero(n);
    v[i] = entry_div_factor(entry_const(Rational(-2)), 2 * i + 1);
    v[i + 1] = entry_div_factor(entry_const(Rational(2)), 2 * i + 1);
    return v;
}

// w^4 C_i = -6 (w^2 B_i - w^2 B_{i+1}) / (2i+2+s)
AVec avec_w4C(int i, int n) {
    AVec d = avec_add(avec_w2B(i, n), avec_scale(avec_w2B(i + 1, n), entry_const(Rational(-1))));
    AVec r(n);
    for (int j = 0; j < n; ++j)
        r[j] = entry_div_factor(entry_scale_rat(d[j], Rational(-6)), 2 * i + 2);
    return r;
}

// w^6 D_i = -10 (w^4 C_i - w^4 C_{i+1}) / (2i+3+s)
AVec avec_w6D(int i, int n) {
    AVec d = avec_add(avec_w4C(i, n), avec_scale(avec_w4C(i + 1, n), entry_const(Rational(-1))));
    AVec r(n);
    for (int j = 0; j < n; ++j)
        r[j] = entry_div_factor(entry_scale_rat(d[j], Rational(-10)), 2 * i + 3);
    return r;
}

} // namespace

Complex SigmaEntry::eval(Complex a, Complex b) const {
    Complex s = a + b;
    Complex num_v = num.eval(s, a * b);
    Complex den_v(static_cast<double>(den_scale), 0.0);
    for (const auto& [m, e] : den_factors)
        for (int i = 0; i < e; ++i) den_v *= s + Complex(m, 0.0);
    return num_v / den_v;
}

double SigmaEntry::eval(double a, double b) const {
    double s = a + b;
    double num_v = num.eval(s, a * b);
    double den_v = static_cast<double>(den_scale);
    for (const auto& [m, e] : den_factors)
        for (int i = 0; i < e; ++i) den_v *= s + m;
    return num_v / den_v;
}

RationalPoly SigmaEntry::den_expanded() const {
    RationalPoly d{den_scale};
    for (const auto& [m, e] : den_factors)
        for (int i = 0; i < e; ++i) d = d * factor_poly(m);
    return d;
}

std::vector<double> SigmaTable::sigma_at(double a, double b) const {
    std::vector<double> out;
    out.reserve(sigma.size());
    for (const auto& e : sigma) out.push_back(e.eval(a, b));
    return out;
}

std::vector<double> SigmaTable::g_series_at(double a, double b) const {
    double s = a + b, p = a * b;
    double den = g_den.eval(s, p);
    std::vector<double> out(g_num.size());
    for (size_t n = 0; n < g_num.size(); ++n) out[n] = g_num[n].eval(s, p) / den;
    return out;
}

double GEvaluator::direct(double eta) const {
    double v = std::pow(eta, -a) + std::pow(eta, -b);
    for (size_t l = 0; l < sigma.size(); ++l)
        v -= sigma[l] * (std::pow(eta, static_cast<double>(l)) +
                         std::pow(eta, -s - static_cast<double>(l)));
    return v;
}

double GEvaluator::series(double one_minus_eta) const {
    // w = eta - 1 = -one_minus_eta; Horner from the top
    double w = -one_minus_eta;
    double acc = 0.0;
    for (size_t i = g.size(); i-- > 0;) acc = acc * w + g[i];
    return acc;
}

double GEvaluator::value(double eta, double one_minus_eta) const {
    if (k >= 0 && std::abs(one_minus_eta) <= switch_radius) return series(one_minus_eta);
    return direct(eta);
}

Ladder::Ladder(int truncation) : T_(truncation) {
    if (T_ < 18) throw DomainError("Ladder: truncation order must be >= 18");
    const int T = T_;

    // base series
    std::vector<FormalSeries> A;
    for (int i = 0; i <= 8; ++i)
        A.push_back(FormalSeries::eta_power(0, i, T) + FormalSeries::eta_power(-1, -i, T));
    FormalSeries P = FormalSeries::eta_power_sum(T);

    auto note = [&](const std::string& step) { certified_.push_back(step); };

    // B_i = -2 ((A_i - A_{i+1}) / w^2) / (2i+1+s), and the analogous
    // C, D, E, F, G, H rungs; each certifies the w^2 vanishing and the
    // exact linear division.
    auto rung = [&](const std::vector<FormalSeries>& prev, int count, Rational mult,
                    int offset, const char* name) {
        std::vector<FormalSeries> out;
        for (int i = 0; i < count; ++i) {
            std::string step = std::string(name) + std::to_string(i);
            FormalSeries d = (prev[i] - prev[i + 1]).shift_w2(step + " w^2");
            out.push_back(
                d.divide_linear(1, 0, Rational(2 * i + offset), step + " by (s+" +
                                std::to_string(2 * i + offset) + ")")
                    .scaled(-mult));
            note(step);
        }
        return out;
    };

    auto B = rung(A, 7, 2, 1, "B");
    auto C = rung(B, 6, 6, 2, "C");
    auto D = rung(C, 5, 10, 3, "D");
    auto E = rung(D, 4, 14, 4, "E");
    auto F = rung(E, 3, 18, 5, "F");
    auto G = rung(F, 2, 22, 6, "G");
    auto H = rung(G, 1, 26, 7, "H");

    // X_0 = ((A_0 - (eta^{-a}+eta^{-b})) / w^2) / p
    std::vector<FormalSeries> X;
    {
        FormalSeries n0 = (A[0] - P).shift_w2("X0 w^2");
        X.push_back(n0.divide_linear(0, 1, 0, "X0 by ab"));
        note("X0");
    }
    // X_n = -(2n+1)(2n+2) ((X_{n-1} - L/2) / w^2) / (n^2 + n s + p)
    const FormalSeries* companions[7] = {&B[0], &C[0], &D[0], &E[0], &F[0], &G[0], &H[0]};
    for (int n = 1; n <= 7; ++n) {
        std::string step = "X" + std::to_string(n);
        FormalSeries num =
            (X[n - 1] - companions[n - 1]->scaled(Rational(1, 2))).shift_w2(step + " w^2");
        FormalSeries xn = num.divide_linear(Rational(n), 1, Rational(n * n),
                                            step + " by (p+" + std::to_string(n) +
                                                "s+" + std::to_string(n * n) + ")");
        X.push_back(xn.scaled(Rational(-(2 * n + 1) * (2 * n + 2))));
        note(step);
    }

    // sigma tables for k = 0..3 from the chain, in the A-basis:
    // eta^{-a}+eta^{-b} = A_0 - (p/2) w^2 B_0 - (p mu1 / 2) w^4 C_0
    //                     - (p mu1 mu2 / 2) w^6 D_0 - p mu1 mu2 mu3 w^8 X_3
    RationalPoly s_var = RationalPoly::var_a();
    RationalPoly p_var = RationalPoly::var_b();
    RationalPoly mu1 = (RationalPoly::constant(-1) - s_var - p_var) * Rational(1, 12);
    RationalPoly mu2 =
        (RationalPoly::constant(-4) - s_var * Rational(2) - p_var) * Rational(1, 30);
    RationalPoly mu3 =
        (RationalPoly::constant(-9) - s_var * Rational(3) - p_var) * Rational(1, 56);

    for (int k = 0; k <= 3; ++k) {
        int n = k + 2;
        AVec sub = avec_zero(n);
        sub[0] = entry_const(Rational(1));
        if (k >= 1) {
            SigmaEntry f;
            f.num = p_var * Rational(-1, 2);
            sub = avec_add(sub, avec_scale(avec_w2B(0, n), f));
        }
        if (k >= 2) {
            SigmaEntry f;
            f.num = p_var * mu1 * Rational(-1, 2);
            sub = avec_add(sub, avec_scale(avec_w4C(0, n), f));
        }
        if (k >= 3) {
            SigmaEntry f;
            f.num = p_var * mu1 * mu2 * Rational(-1, 2);
            sub = avec_add(sub, avec_scale(avec_w6D(0, n), f));
        }

        SigmaTable table;
        table.k = k;
        table.sigma.assign(sub.begin(), sub.begin() + (k + 1));

        // exact G_k series over the common denominator of all sigma_l
        RationalPoly den(Rational(1));
        std::map<int, int> den_factors;
        for (const auto& e : table.sigma)
            for (const auto& [m, mult] : e.den_factors)
                den_factors[m] = std::max(den_factors[m], mult);
        for (const auto& [m, mult] : den_factors)
            for (int i = 0; i < mult; ++i) den = den * factor_poly(m);

        std::vector<RationalPoly> sigma_over_common;
        for (const auto& e : table.sigma) {
            RationalPoly mult(Rational(1));
            for (const auto& [m, need] : den_factors) {
                int have = e.den_factors.count(m) ? e.den_factors.at(m) : 0;
                for (int i = have; i < need; ++i) mult = mult * factor_poly(m);
            }
            sigma_over_common.push_back(e.num * mult);
        }
        table.g_den = den;
        table.g_num.resize(T + 1);
        for (int m = 0; m <= T; ++m) {
            RationalPoly acc = P[m] * den;
            for (int l = 0; l <= k; ++l) acc -= sigma_over_common[l] * A[l][m];
            table.g_num[m] = acc;
        }
        for (int m = 0; m <= 2 * k + 1; ++m) {
            if (!table.g_num[m].is_zero())
                throw DivisionNotExactError(
                    "G_" + std::to_string(k) + " vanishing",
                    "w^" + std::to_string(m) + " coefficient nonzero");
        }
        note("G_" + std::to_string(k) + " = O(w^" + std::to_string(2 * k + 2) + ")");

        // chain-consistency: G_k = -p mu1..mu_k w^{2k+2} X_k exactly
        {
            RationalPoly pref = p_var * Rational(-1);
            if (k >= 1) pref = pref * mu1;
            if (k >= 2) pref = pref * mu2;
            if (k >= 3) pref = pref * mu3;
            const FormalSeries& Xk = X[k];
            int upto = std::min<int>(T, Xk.order() + 2 * k + 2);
            for (int m = 2 * k + 2; m <= upto; ++m) {
                RationalPoly lhs = table.g_num[m];
                RationalPoly rhs = pref * Xk[m - 2 * k - 2] * den;
                if (!(lhs - rhs).is_zero())
                    throw DivisionNotExactError(
                        "G_" + std::to_string(k) + " chain identity",
                        "mismatch at w^" + std::to_string(m));
            }
            note("G_" + std::to_string(k) + " chain identity");
        }

        // independent exact triangular solve cross-check
        {
            auto solved = solve_sigma_exact(k, P);
            for (int l = 0; l <= k; ++l) {
                PolyRatio chain{table.sigma[l].num, table.sigma[l].den_expanded()};
                if (!chain.equals(solved[l]))
                    throw DivisionNotExactError("sigma cross-check k=" + std::to_string(k),
                                                "entry l=" + std::to_string(l));
            }
            note("sigma_" + std::to_string(k) + " triangular-solve cross-check");
        }

        tables_.push_back(std::move(table));
    }
}

const SigmaTable& Ladder::sigma_table(int k) const {
    if (k < 0 || k > 3) throw DomainError("sigma_table: k must be in [0, 3]");
    return tables_[k];
}

GEvaluator Ladder::g_evaluator(int k, const ParamPair& p) const {
    if (k < -1 || k > 3) throw DomainError("g_evaluator: k must be in [-1, 3]");
    if (!p.is_real()) throw DomainError("g_evaluator: real parameters only");
    if (!p.in_strip(k)) throw RegionError("g_evaluator: (a,b) not in O_" + std::to_string(k));
    GEvaluator ev;
    ev.k = k;
    ev.a = p.ra();
    ev.b = p.rb();
    ev.s = ev.a + ev.b;
    if (k >= 0) {
        const SigmaTable& t = tables_[k];
        ev.sigma = t.sigma_at(ev.a, ev.b);
        ev.g = t.g_series_at(ev.a, ev.b);
        for (int m = 0; m <= 2 * k + 1; ++m) ev.g[m] = 0.0;
    }
    return ev;
}

double Ladder::eval_G(int k, double eta, const ParamPair& p) const {
    if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("eval_G: eta must be in (0, 1]");
    return g_evaluator(k, p).value(eta, 1.0 - eta);
}

double Ladder::eval_F(int k, double x, double xt, const ParamPair& p) const {
    if (!(x > 0.0 && xt > 0.0)) throw DomainError("eval_F: points must be positive");
    if (k < -1 || k > 3) throw DomainError("eval_F: k must be in [-1, 3]");
    if (!p.in_strip(k)) throw RegionError("eval_F: (a,b) not in O_" + std::to_string(k));
    double a = p.ra(), b = p.rb(), s = a + b;
    double v = std::pow(x, -a) * std::pow(xt, -b) + std::pow(x, -b) * std::pow(xt, -a);
    if (k >= 0) {
        auto sig = tables_[k].sigma_at(a, b);
        for (int l = 0; l <= k; ++l)
            v -= sig[l] * (std::pow(x, -s - l) * std::pow(xt, static_cast<double>(l)) +
                           std::pow(x, static_cast<double>(l)) * std::pow(xt, -s - l));
    }
    return v;
}

void Ladder::dump_sigma_json(int k, std::ostream& os) const {
    const SigmaTable& t = sigma_table(k);
    nlohmann::json arr = nlohmann::json::array();
    auto poly_json = [](const RationalPoly& poly_sp) {
        nlohmann::json terms = nlohmann::json::array();
        RationalPoly ab = expand_sp_to_ab(poly_sp);
        for (const auto& [m, c] : ab.terms()) {
            std::ostringstream cs;
            cs << c;
            terms.push_back({m.first, m.second, cs.str()});
        }
        return terms;
    };
    for (int l = 0; l <= k; ++l) {
        nlohmann::json entry;
        entry["k"] = k;
        entry["l"] = l;
        entry["numerator"] = poly_json(t.sigma[l].num);
        entry["denominator"] = poly_json(t.sigma[l].den_expanded());
        arr.push_back(entry);
    }
    os << arr.dump(2) << "\n";
}

const Ladder& Ladder::shared() {
    static const Ladder instance(30);
    return instance;
}

RationalPoly expand_sp_to_ab(const RationalPoly& poly_sp) {
    RationalPoly a = RationalPoly::var_a();
    RationalPoly b = RationalPoly::var_b();
    RationalPoly s = a + b;
    RationalPoly p = a * b;
    RationalPoly out;
    for (const auto& [m, c] : poly_sp.terms()) {
        RationalPoly t{c};
        for (int i = 0; i < m.first; ++i) t = t * s;
        for (int j = 0; j < m.second; ++j) t = t * p;
        out += t;
    }
    return out;
}

} // namespace heatsing
