#pragma once

#include <array>
#include <cstddef>

#include "w49/laurent.hpp"
#include "w49/report.hpp"
#include "w49/series.hpp"

namespace w49 {

// F1 - q*F2 - q^2 + q^5*F3, the quadrinomial whose powers drive everything.
LaurentPoly dissection_quadrinomial();

// One multinomial term of the quadrinomial's ell-th power:
// binom(ell,i)*binom(ell-i,j)*binom(i,k)*(-1)^(i+j-k) * F1^(ell-i-j) F2^j F3^k q^(2i+j+3k)
// with 0 <= i <= ell, 0 <= j <= ell-i, 0 <= k <= i (IndexOutOfRange otherwise).
LaurentPoly build_R_general(int ell, int i, int j, int k);

// The ell = 4 term used by the five-term group lists.
LaurentPoly build_R(int i, int j, int k);

// The explicit five-term groups of the quartic expansion, t in 1..7; every
// monomial of the t-th group has eq == t-1 (mod 7).
LaurentPoly build_A(int t);

// Same grouping derived from the multinomial expansion for arbitrary ell,
// filtering terms by q-degree residue t-1 (mod 7).
LaurentPoly build_A_general(int ell, int t);

// Residue class plus a Laurent polynomial in F1, F2 only (e3 = eq = 0):
// represents q^residue * poly after the rewrite rules below.
struct ReducedForm {
    int residue = 0;
    LaurentPoly poly;
    friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

// Normal form under the relation ideal: F3 -> F1^-1 F2^-1 and
// q^7 -> F1^3 F2 - F1^2 F2^3, split by q-residue class 0..6.
std::array<LaurentPoly, 7> reduce_classes(const LaurentPoly& p);

// Same, for inputs supported on a single residue class (throws Error when the
// reduction spans several classes; zero input reduces to residue 0).
ReducedForm reduce(const LaurentPoly& p);

// Maps a ReducedForm back to a LaurentPoly in F1, F2 and q^residue.
LaurentPoly embed(const ReducedForm& rf);

// Substitutes Fj -> f_{j,7}(q^7) and Q -> q, exactly, to the given order.
// Negative F-exponents are fine (the base series are units).
TruncatedSeries eval_poly(const LaurentPoly& p, std::size_t order);

// Randomized soundness of the rewrite rules: eval_poly(p) == eval_poly(embed
// of every reduced class of p) for `trials` seeded random polynomials.
CheckReport check_reduction_soundness(unsigned seed, int trials, std::size_t order);

}  // namespace w49
