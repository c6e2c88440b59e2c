#include "w49/qseries.hpp"

#include <stdexcept>

#include "w49/errors.hpp"

namespace w49 {

TruncatedSeries eta(unsigned n, std::size_t order) {
    if (n == 0) throw std::invalid_argument("eta step must be positive");
    TruncatedSeries s(order);
    s.at(0) = 1;
    // Exponents n*k(3k-1)/2 and n*k(3k+1)/2 carry sign (-1)^k.
    for (unsigned long k = 1;; ++k) {
        const unsigned long g1 = k * (3 * k - 1) / 2;
        if (static_cast<unsigned long>(n) * g1 >= order) break;
        const int sign = (k % 2 == 1) ? -1 : 1;
        s.at(n * g1) += sign;
        const unsigned long g2 = k * (3 * k + 1) / 2;
        if (static_cast<unsigned long>(n) * g2 < order) s.at(n * g2) += sign;
    }
    return s;
}

TruncatedSeries eta_product(unsigned n, std::size_t order) {
    return pochhammer(n, n, order);
}

TruncatedSeries pochhammer(unsigned a, unsigned b, std::size_t order) {
    if (a == 0 || b == 0) throw std::invalid_argument("pochhammer arguments must be positive");
    TruncatedSeries c(order);
    c.at(0) = 1;
    // In-place multiplication by each (1 - q^m) factor.
    for (unsigned long m = a; m < order; m += b)
        for (std::size_t i = order - 1; i >= m; --i) c.at(i) -= c[i - m];
    return c;
}

TruncatedSeries f_jk(unsigned j, unsigned k, std::size_t order) {
    if (j == 0 || 2 * j >= k)
        throw InvalidDissectionIndex("f_jk needs 0 < 2j < k, got j=" + std::to_string(j) +
                                     " k=" + std::to_string(k));
    TruncatedSeries num = mul(pochhammer(2 * j, k, order), pochhammer(k - 2 * j, k, order));
    TruncatedSeries den = mul(pochhammer(j, k, order), pochhammer(k - j, k, order));
    return mul(num, inverse(den));
}

TruncatedSeries eval_eta_quotient(const EtaQuotientSpec& spec, std::size_t order) {
    TruncatedSeries num = TruncatedSeries::one(order);
    TruncatedSeries den = TruncatedSeries::one(order);
    for (const auto& [n, e] : spec.factors) {
        if (n == 0) throw std::invalid_argument("eta quotient step must be positive");
        if (e > 0)
            num = mul(num, pow(eta(n, order), e));
        else if (e < 0)
            den = mul(den, pow(eta(n, order), -static_cast<long>(e)));
    }
    return mul(num, inverse(den));
}

namespace {

// f_{j,7}(q^7) as a plain-q series of the given order.
TruncatedSeries fj7_at_q7(unsigned j, std::size_t order) {
    const std::size_t m = (order + 6) / 7;
    const TruncatedSeries base = f_jk(j, 7, m);
    TruncatedSeries out(order);
    for (std::size_t i = 0; i < m && 7 * i < order; ++i) out.at(7 * i) = base[i];
    return out;
}

CheckReport report_from(const char* name, std::size_t order, const EqReport& eq) {
    CheckReport r;
    r.name = name;
    r.order = order;
    r.pass = eq.equal;
    if (!eq.equal) {
        r.has_mismatch = true;
        r.mismatch_index = eq.index;
        r.lhs = to_string(eq.lhs);
        r.rhs = to_string(eq.rhs);
    }
    return r;
}

}  // namespace

CheckReport check_jacobi(std::size_t order) {
    const TruncatedSeries cube = pow(eta(1, order), 3);
    TruncatedSeries sparse(order);
    for (unsigned long n = 0; n * (n + 1) / 2 < order; ++n) {
        const long coeff = (n % 2 == 0) ? static_cast<long>(2 * n + 1)
                                        : -static_cast<long>(2 * n + 1);
        sparse.at(n * (n + 1) / 2) += coeff;
    }
    return report_from("jacobi", order, eq_upto(cube, sparse, order));
}

CheckReport check_dissection7(std::size_t order) {
    TruncatedSeries quad = fj7_at_q7(1, order);
    quad = sub(quad, shift(fj7_at_q7(2, order), 1));
    quad = sub(quad, TruncatedSeries::monomial(order, 2, 1));
    quad = add(quad, shift(fj7_at_q7(3, order), 5));
    const TruncatedSeries lhs = eta(1, order);
    const TruncatedSeries rhs = mul(eta(49, order), quad);
    return report_from("dissection7", order, eq_upto(lhs, rhs, order));
}

CheckReport check_relations(std::size_t order) {
    const TruncatedSeries f1 = fj7_at_q7(1, order);
    const TruncatedSeries f2 = fj7_at_q7(2, order);
    const TruncatedSeries f3 = fj7_at_q7(3, order);
    const TruncatedSeries one = TruncatedSeries::one(order);

    const TruncatedSeries rel[4] = {
        // F1^2 - F1 F2^2 - q^7 F3
        sub(sub(mul(f1, f1), mul(f1, mul(f2, f2))), shift(f3, 7)),
        // F1 - F2^2 - q^7 F2 F3^2
        sub(sub(f1, mul(f2, f2)), shift(mul(f2, mul(f3, f3)), 7)),
        // F2 - F1^2 F3 + q^7 F3^2
        add(sub(f2, mul(mul(f1, f1), f3)), shift(mul(f3, f3), 7)),
        // F1 F2 F3 - 1
        sub(mul(f1, mul(f2, f3)), one),
    };

    CheckReport r;
    r.name = "relations";
    r.order = order;
    r.pass = true;
    for (int i = 0; i < 4; ++i) {
        const EqReport eq = eq_upto(rel[i], TruncatedSeries(order), order);
        if (!eq.equal) {
            r.pass = false;
            r.has_mismatch = true;
            r.mismatch_index = eq.index;
            r.lhs = to_string(eq.lhs);
            r.rhs = "0";
            r.note = "relation " + std::to_string(i + 1) + " nonzero";
            return r;
        }
    }
    r.note = "all four relations vanish";
    return r;
}

}  // namespace w49
