#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>

#include "w49/bigint.hpp"
#include "w49/errors.hpp"

namespace w49 {

// Exponent tuple for one Laurent monomial. F1, F2, F3 stand for the three
// 7-dissection quotient series at argument q^7; Q is the literal q. F-exponents
// may be negative; eq stays nonnegative everywhere in the pipeline.
struct Monomial {
    int e1 = 0, e2 = 0, e3 = 0, eq = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse exact Laurent polynomial: monomial -> nonzero BigInt coefficient.
// The map is ordered, so equality is structural and printing is canonical.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly term(BigInt c, int e1 = 0, int e2 = 0, int e3 = 0, int eq = 0);

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::map<Monomial, BigInt>& terms() const { return t_; }

    BigInt coeff(const Monomial& m) const;

    // Accumulates c into the monomial's coefficient, erasing it on cancellation.
    void add_term(const Monomial& m, const BigInt& c);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  private:
    std::map<Monomial, BigInt> t_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly neg(const LaurentPoly& a);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly scale(const LaurentPoly& a, const BigInt& c);

// Reciprocal of a single unit-coefficient monomial; anything else throws
// NonMonomialInverse.
LaurentPoly monomial_inverse(const LaurentPoly& a);

// e >= 0 by repeated multiplication; e < 0 routes through monomial_inverse.
LaurentPoly pow(const LaurentPoly& a, long e);

// Deterministic rendering, terms in monomial order, e.g. "-4*F1^3*F2*q".
std::string to_string(const LaurentPoly& p);

}  // namespace w49
