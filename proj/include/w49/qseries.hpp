#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "w49/report.hpp"
#include "w49/series.hpp"

namespace w49 {

// f_n = (q^n; q^n)_inf via the sparse pentagonal-number expansion of
// (q;q)_inf with q -> q^n.
TruncatedSeries eta(unsigned n, std::size_t order);

// Same product expanded term by term: prod_{j>=1} (1 - q^{n j}). Slower;
// kept as an in-module oracle, the tests require it to agree with eta().
TruncatedSeries eta_product(unsigned n, std::size_t order);

// (q^a; q^b)_inf = prod_{j>=0} (1 - q^{a+jb}).
TruncatedSeries pochhammer(unsigned a, unsigned b, std::size_t order);

// f_{j,k} = (q^{2j};q^k)(q^{k-2j};q^k) / ((q^j;q^k)(q^{k-j};q^k)).
// Requires 0 < 2j < k; throws InvalidDissectionIndex otherwise.
TruncatedSeries f_jk(unsigned j, unsigned k, std::size_t order);

// Denotes prod f_n^e over the listed (n, e) pairs; empty list is 1.
struct EtaQuotientSpec {
    std::vector<std::pair<unsigned, int>> factors;
};

TruncatedSeries eval_eta_quotient(const EtaQuotientSpec& spec, std::size_t order);

// f1^3 equals the sparse sum over triangular numbers sum (-1)^n (2n+1) q^{n(n+1)/2}.
CheckReport check_jacobi(std::size_t order);

// f1 = f49 * (F1 - q F2 - q^2 + q^5 F3) with Fj = f_{j,7}(q^7).
CheckReport check_dissection7(std::size_t order);

// The four algebraic relations among f_{1,7}(q^7), f_{2,7}(q^7), f_{3,7}(q^7)
// and q^7 each evaluate to the zero series.
CheckReport check_relations(std::size_t order);

}  // namespace w49
