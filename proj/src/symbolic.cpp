#include "w49/symbolic.hpp"

#include <random>
#include <vector>

#include "w49/errors.hpp"
#include "w49/qseries.hpp"

namespace w49 {

LaurentPoly dissection_quadrinomial() {
    LaurentPoly p = LaurentPoly::term(1, 1, 0, 0, 0);       // F1
    p = add(p, LaurentPoly::term(-1, 0, 1, 0, 1));          // -q F2
    p = add(p, LaurentPoly::term(-1, 0, 0, 0, 2));          // -q^2
    p = add(p, LaurentPoly::term(1, 0, 0, 1, 5));           // q^5 F3
    return p;
}

LaurentPoly build_R_general(int ell, int i, int j, int k) {
    if (ell < 1 || i < 0 || i > ell || j < 0 || j > ell - i || k < 0 || k > i)
        throw IndexOutOfRange("multinomial indices (" + std::to_string(i) + "," +
                              std::to_string(j) + "," + std::to_string(k) +
                              ") out of range for power " + std::to_string(ell));
    BigInt c = binomial(ell, i) * binomial(ell - i, j) * binomial(i, k);
    if ((i + j - k) % 2 != 0) c = -c;
    return LaurentPoly::term(c, ell - i - j, j, k, 2 * i + j + 3 * k);
}

LaurentPoly build_R(int i, int j, int k) { return build_R_general(4, i, j, k); }

namespace {

// The five-term groups of the quartic expansion, one row per residue class.
constexpr int kQuarticGroups[7][5][3] = {
    {{0, 0, 0}, {1, 2, 1}, {2, 0, 1}, {3, 1, 0}, {4, 0, 2}},
    {{0, 1, 0}, {1, 3, 1}, {2, 1, 1}, {4, 0, 0}, {3, 0, 3}},
    {{0, 2, 0}, {1, 0, 0}, {2, 2, 1}, {3, 0, 1}, {3, 1, 3}},
    {{0, 3, 0}, {1, 1, 0}, {2, 0, 2}, {3, 1, 1}, {4, 0, 3}},
    {{0, 4, 0}, {1, 2, 0}, {2, 0, 0}, {2, 1, 2}, {4, 0, 1}},
    {{1, 3, 0}, {1, 0, 1}, {2, 1, 0}, {2, 2, 2}, {3, 0, 2}},
    {{1, 1, 1}, {2, 2, 0}, {3, 0, 0}, {3, 1, 2}, {4, 0, 4}},
};

}  // namespace

LaurentPoly build_A(int t) {
    if (t < 1 || t > 7) throw IndexOutOfRange("group index " + std::to_string(t));
    LaurentPoly out;
    for (const auto& ijk : kQuarticGroups[t - 1])
        out = add(out, build_R(ijk[0], ijk[1], ijk[2]));
    return out;
}

LaurentPoly build_A_general(int ell, int t) {
    if (t < 1 || t > 7) throw IndexOutOfRange("group index " + std::to_string(t));
    LaurentPoly out;
    for (int i = 0; i <= ell; ++i)
        for (int j = 0; j <= ell - i; ++j)
            for (int k = 0; k <= i; ++k)
                if ((2 * i + j + 3 * k) % 7 == t - 1)
                    out = add(out, build_R_general(ell, i, j, k));
    return out;
}

namespace {

// (F1^3 F2 - F1^2 F2^3)^s by the binomial theorem.
LaurentPoly q7_rule_power(unsigned s) {
    LaurentPoly out;
    for (unsigned u = 0; u <= s; ++u) {
        BigInt c = binomial(s, u);
        if (u % 2 == 1) c = -c;
        out.add_term(Monomial{static_cast<int>(3 * s - u), static_cast<int>(s + 2 * u), 0, 0}, c);
    }
    return out;
}

}  // namespace

std::array<LaurentPoly, 7> reduce_classes(const LaurentPoly& p) {
    std::array<LaurentPoly, 7> classes;
    std::vector<LaurentPoly> rule_pow{LaurentPoly::term(1)};
    for (const auto& [m, c] : p.terms()) {
        // F3 -> F1^-1 F2^-1 first, then q^7 -> F1^3 F2 - F1^2 F2^3.
        const int a = m.e1 - m.e3;
        const int b = m.e2 - m.e3;
        const int s = m.eq / 7;
        const int t = m.eq % 7;
        while (static_cast<int>(rule_pow.size()) <= s)
            rule_pow.push_back(q7_rule_power(static_cast<unsigned>(rule_pow.size())));
        for (const auto& [rm, rc] : rule_pow[s].terms())
            classes[t].add_term(Monomial{a + rm.e1, b + rm.e2, 0, 0}, c * rc);
    }
    return classes;
}

ReducedForm reduce(const LaurentPoly& p) {
    std::array<LaurentPoly, 7> classes = reduce_classes(p);
    ReducedForm rf;
    bool found = false;
    for (int t = 0; t < 7; ++t) {
        if (classes[t].is_zero()) continue;
        if (found)
            throw Error("reduction spans several q-residue classes; use reduce_classes");
        rf.residue = t;
        rf.poly = std::move(classes[t]);
        found = true;
    }
    return rf;
}

LaurentPoly embed(const ReducedForm& rf) {
    LaurentPoly out;
    for (const auto& [m, c] : rf.poly.terms())
        out.add_term(Monomial{m.e1, m.e2, 0, rf.residue}, c);
    return out;
}

namespace {

// Power cache over one base series; negative exponents via the inverse.
class PowerCache {
  public:
    explicit PowerCache(TruncatedSeries base)
        : base_(std::move(base)), inv_(inverse(base_)) {
        memo_.emplace(0, TruncatedSeries::one(base_.order()));
    }

    const TruncatedSeries& get(int e) {
        auto it = memo_.find(e);
        if (it != memo_.end()) return it->second;
        const TruncatedSeries& prev = get(e > 0 ? e - 1 : e + 1);
        return memo_.emplace(e, mul(prev, e > 0 ? base_ : inv_)).first->second;
    }

  private:
    TruncatedSeries base_, inv_;
    std::map<int, TruncatedSeries> memo_;
};

TruncatedSeries fj7_at_q7(unsigned j, std::size_t order) {
    const std::size_t m = (order + 6) / 7;
    const TruncatedSeries base = f_jk(j, 7, m);
    TruncatedSeries out(order);
    for (std::size_t i = 0; i < m && 7 * i < order; ++i) out.at(7 * i) = base[i];
    return out;
}

}  // namespace

TruncatedSeries eval_poly(const LaurentPoly& p, std::size_t order) {
    TruncatedSeries out(order);
    if (p.is_zero()) return out;
    PowerCache c1(fj7_at_q7(1, order));
    PowerCache c2(fj7_at_q7(2, order));
    PowerCache c3(fj7_at_q7(3, order));
    for (const auto& [m, c] : p.terms()) {
        if (m.eq < 0 || static_cast<std::size_t>(m.eq) >= order) continue;
        TruncatedSeries term = c1.get(m.e1);
        if (m.e2 != 0) term = mul(term, c2.get(m.e2));
        if (m.e3 != 0) term = mul(term, c3.get(m.e3));
        if (m.eq != 0) term = shift(term, static_cast<std::size_t>(m.eq));
        out = add(out, scale(term, c));
    }
    return out;
}

CheckReport check_reduction_soundness(unsigned seed, int trials, std::size_t order) {
    CheckReport rep;
    rep.name = "reduction-soundness";
    rep.order = order;
    rep.pass = true;

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> n_terms(1, 6);
    std::uniform_int_distribution<int> f_exp(-3, 3);
    std::uniform_int_distribution<int> q_exp(0, 9);
    std::uniform_int_distribution<int> coeff(-9, 9);

    for (int t = 0; t < trials; ++t) {
        LaurentPoly p;
        const int terms = n_terms(rng);
        for (int i = 0; i < terms; ++i)
            p.add_term(Monomial{f_exp(rng), f_exp(rng), f_exp(rng), q_exp(rng)},
                       BigInt(coeff(rng)));
        LaurentPoly back;
        const std::array<LaurentPoly, 7> classes = reduce_classes(p);
        for (int r = 0; r < 7; ++r)
            back = add(back, embed(ReducedForm{r, classes[r]}));
        const EqReport eq = eq_upto(eval_poly(p, order), eval_poly(back, order), order);
        if (!eq.equal) {
            rep.pass = false;
            rep.has_mismatch = true;
            rep.mismatch_index = eq.index;
            rep.lhs = to_string(eq.lhs);
            rep.rhs = to_string(eq.rhs);
            rep.note = "trial " + std::to_string(t) + " (seed " + std::to_string(seed) +
                       "): reduced form evaluates differently";
            return rep;
        }
    }
    rep.note = std::to_string(trials) + " random polynomials, seed " +
               std::to_string(seed);
    return rep;
}

}  // namespace w49
