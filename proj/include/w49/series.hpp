#pragma once

#include <cstddef>
#include <vector>

#include "w49/bigint.hpp"
#include "w49/errors.hpp"

namespace w49 {

// Exact truncated power series in q. coeff(i) is the coefficient of q^i for
// 0 <= i < order(); nothing beyond order() is known or claimed. All arithmetic
// results carry order = min of the operand orders (no silent padding).
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t order);
    explicit TruncatedSeries(std::vector<BigInt> coeffs);

    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries monomial(std::size_t order, std::size_t k, BigInt c);

    std::size_t order() const { return c_.size(); }
    const BigInt& coeff(std::size_t i) const { return c_[i]; }
    const BigInt& operator[](std::size_t i) const { return c_[i]; }
    BigInt& at(std::size_t i) { return c_[i]; }

    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  private:
    std::vector<BigInt> c_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const BigInt& c);

// Requires |coeff(0)| = 1; throws NonUnitConstantTerm otherwise.
TruncatedSeries inverse(const TruncatedSeries& a);

// Repeated squaring; e < 0 routes through inverse().
TruncatedSeries pow(const TruncatedSeries& a, long e);

// Multiplication by q^k; order preserved, top k coefficients discarded.
TruncatedSeries shift(const TruncatedSeries& a, std::size_t k);

// Picks coefficients at indices m*n+r: result coeff(n) = a.coeff(m*n+r).
// Output order is ceil((order-r)/m); throws InsufficientOrder when r >= order.
TruncatedSeries dissect(const TruncatedSeries& a, std::size_t m, std::size_t r);

// q -> q^k; order preserved, information beyond order/k truncated.
TruncatedSeries substitute_power(const TruncatedSeries& a, std::size_t k);

struct EqReport {
    bool equal = true;
    std::size_t index = 0;  // first mismatching index when !equal
    BigInt lhs, rhs;
};

// Coefficientwise comparison on indices 0..n-1; both operands must have
// order >= n (InsufficientOrder otherwise).
EqReport eq_upto(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n);

}  // namespace w49
