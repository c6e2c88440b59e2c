#include "w49/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace w49 {

TruncatedSeries::TruncatedSeries(std::size_t order) : c_(order) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series order must be positive");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t k, BigInt c) {
    TruncatedSeries s(order);
    if (k < order) s.c_[k] = std::move(c);
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigInt& v) { return v == 0; });
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i < n; ++i) out.at(i) = a[i] + b[i];
    return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i < n; ++i) out.at(i) = a[i] - b[i];
    return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;  // eta-type inputs are sparse; skipping pays
        const std::size_t jmax = std::min(b.order(), n - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(out.at(i + j).get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

TruncatedSeries scale(const TruncatedSeries& a, const BigInt& c) {
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out.at(i) = a[i] * c;
    return out;
}

TruncatedSeries inverse(const TruncatedSeries& a) {
    if (a[0] != 1 && a[0] != -1)
        throw NonUnitConstantTerm("cannot invert series with constant term " +
                                  to_string(a[0]));
    const std::size_t n = a.order();
    TruncatedSeries b(n);
    b.at(0) = a[0];  // a0^2 = 1

    // The recurrence sum_{k=0..m} a_k b_{m-k} = 0 touches only the nonzero a_k.
    std::vector<std::size_t> nz;
    for (std::size_t k = 1; k < n; ++k)
        if (a[k] != 0) nz.push_back(k);

    BigInt acc;
    for (std::size_t m = 1; m < n; ++m) {
        acc = 0;
        for (std::size_t k : nz) {
            if (k > m) break;
            mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[m - k].get_mpz_t());
        }
        b.at(m) = (a[0] == 1) ? -acc : acc;
    }
    return b;
}

TruncatedSeries pow(const TruncatedSeries& a, long e) {
    if (e < 0) return pow(inverse(a), -e);
    TruncatedSeries result = TruncatedSeries::one(a.order());
    if (e == 0) return result;
    TruncatedSeries base = a;
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
        if (u & 1UL) result = mul(result, base);
        u >>= 1UL;
        if (u > 0) base = mul(base, base);
    }
    return result;
}

TruncatedSeries shift(const TruncatedSeries& a, std::size_t k) {
    const std::size_t n = a.order();
    TruncatedSeries out(n);
    for (std::size_t i = k; i < n; ++i) out.at(i) = a[i - k];
    return out;
}

TruncatedSeries dissect(const TruncatedSeries& a, std::size_t m, std::size_t r) {
    if (m == 0 || r >= m) throw std::invalid_argument("dissection residue out of range");
    const std::size_t n = a.order();
    if (r >= n)
        throw InsufficientOrder("dissection start q^" + std::to_string(r) +
                                " is beyond truncation order " + std::to_string(n));
    const std::size_t out_n = (n - r + m - 1) / m;
    TruncatedSeries out(out_n);
    for (std::size_t i = 0; i < out_n; ++i) out.at(i) = a[m * i + r];
    return out;
}

TruncatedSeries substitute_power(const TruncatedSeries& a, std::size_t k) {
    if (k == 0) throw std::invalid_argument("substitution power must be positive");
    const std::size_t n = a.order();
    TruncatedSeries out(n);
    for (std::size_t i = 0; i * k < n; ++i) out.at(i * k) = a[i];
    return out;
}

EqReport eq_upto(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n) {
    if (a.order() < n || b.order() < n)
        throw InsufficientOrder("comparison to order " + std::to_string(n) +
                                " exceeds operand orders " + std::to_string(a.order()) +
                                ", " + std::to_string(b.order()));
    EqReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            rep.equal = false;
            rep.index = i;
            rep.lhs = a[i];
            rep.rhs = b[i];
            return rep;
        }
    }
    return rep;
}

}  // namespace w49
