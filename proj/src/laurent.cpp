#include "w49/laurent.hpp"

#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

namespace w49 {

LaurentPoly LaurentPoly::term(BigInt c, int e1, int e2, int e3, int eq) {
    LaurentPoly p;
    if (c != 0) p.t_.emplace(Monomial{e1, e2, e3, eq}, std::move(c));
    return p;
}

BigInt LaurentPoly::coeff(const Monomial& m) const {
    const auto it = t_.find(m);
    return it == t_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    const auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, -c);
    return out;
}

LaurentPoly neg(const LaurentPoly& a) {
    LaurentPoly out;
    for (const auto& [m, c] : a.terms()) out.add_term(m, -c);
    return out;
}

namespace {

// Exponents stay well inside +-2^15 throughout the pipeline; pack them so the
// multiplication hot loop can hash a single 64-bit key.
std::uint64_t pack(const Monomial& m) {
    const auto u = [](int e) { return static_cast<std::uint64_t>(e + 0x8000) & 0xffffULL; };
    return u(m.e1) << 48 | u(m.e2) << 32 | u(m.e3) << 16 | u(m.eq);
}

Monomial unpack(std::uint64_t k) {
    const auto s = [](std::uint64_t v) { return static_cast<int>(v & 0xffffULL) - 0x8000; };
    return Monomial{s(k >> 48), s(k >> 32), s(k >> 16), s(k)};
}

struct SplitMix {
    std::size_t operator()(std::uint64_t x) const {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};

}  // namespace

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::unordered_map<std::uint64_t, BigInt, SplitMix> acc;
    acc.reserve(a.term_count() * 2 + b.term_count() * 2);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            const Monomial m{ma.e1 + mb.e1, ma.e2 + mb.e2, ma.e3 + mb.e3, ma.eq + mb.eq};
            mpz_addmul(acc[pack(m)].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
    LaurentPoly out;
    for (auto& [k, c] : acc)
        if (c != 0) out.add_term(unpack(k), c);
    return out;
}

LaurentPoly scale(const LaurentPoly& a, const BigInt& c) {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [m, v] : a.terms()) out.add_term(m, v * c);
    return out;
}

LaurentPoly monomial_inverse(const LaurentPoly& a) {
    if (a.term_count() != 1)
        throw NonMonomialInverse("cannot invert a polynomial with " +
                                 std::to_string(a.term_count()) + " terms");
    const auto& [m, c] = *a.terms().begin();
    if (c != 1 && c != -1)
        throw NonMonomialInverse("cannot invert monomial with non-unit coefficient " +
                                 to_string(c));
    if (m.eq != 0)
        throw NonMonomialInverse("cannot invert a monomial carrying a power of q");
    return LaurentPoly::term(c, -m.e1, -m.e2, -m.e3, 0);
}

LaurentPoly pow(const LaurentPoly& a, long e) {
    if (e < 0) return pow(monomial_inverse(a), -e);
    LaurentPoly result = LaurentPoly::term(1);
    LaurentPoly base = a;
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
        if (u & 1UL) result = mul(result, base);
        u >>= 1UL;
        if (u > 0) base = mul(base, base);
    }
    return result;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        first = false;
        BigInt mag = abs(c);
        bool wrote = false;
        if (mag != 1) {
            os << mag.get_str();
            wrote = true;
        }
        const auto var = [&](const char* name, int e) {
            if (e == 0) return;
            if (wrote) os << "*";
            os << name;
            if (e != 1) os << "^" << e;
            wrote = true;
        };
        var("F1", m.e1);
        var("F2", m.e2);
        var("F3", m.e3);
        var("q", m.eq);
        if (!wrote) os << "1";
    }
    return os.str();
}

}  // namespace w49
