#include "w49/partition.hpp"

#include "w49/errors.hpp"
#include "w49/qseries.hpp"
#include "w49/series.hpp"

namespace w49 {

std::vector<BigInt> partition_numbers(std::size_t N) {
    std::vector<BigInt> p(N + 1);
    p[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        BigInt& s = p[n];
        for (unsigned long k = 1;; ++k) {
            const unsigned long g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            const bool plus = (k % 2 == 1);
            if (plus)
                s += p[n - g1];
            else
                s -= p[n - g1];
            const unsigned long g2 = k * (3 * k + 1) / 2;
            if (g2 <= n) {
                if (plus)
                    s += p[n - g2];
                else
                    s -= p[n - g2];
            }
        }
    }
    return p;
}

std::vector<BigInt> two_color_numbers(unsigned r, std::size_t N) {
    const std::size_t order = N + 1;
    const TruncatedSeries gen = inverse(mul(eta(1, order), eta(r, order)));
    return gen.coeffs();
}

CongruenceReport check_congruence(const std::vector<BigInt>& values,
                                  const CongruenceClaim& claim) {
    if (claim.count > 0) {
        const unsigned long top = claim.step * (claim.count - 1) + claim.residue;
        if (values.size() <= top)
            throw InsufficientData("need value at index " + std::to_string(top) +
                                   " but only " + std::to_string(values.size()) +
                                   " values supplied");
    }
    CongruenceReport rep;
    rep.claim = claim;
    rep.pass = true;
    rep.entries.reserve(claim.count);
    const BigInt m(static_cast<unsigned long>(claim.modulus));
    for (std::size_t n = 0; n < claim.count; ++n) {
        CongruenceEntry e;
        e.n = n;
        e.value = values[claim.step * n + claim.residue];
        e.divisible = mpz_divisible_p(e.value.get_mpz_t(), m.get_mpz_t()) != 0;
        e.quotient = e.value / m;
        if (!e.divisible) rep.pass = false;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

CheckReport verify_step1_mod49(std::size_t order) {
    CheckReport r;
    r.name = "step1mod49";
    r.order = order;

    const TruncatedSeries lhs =
        dissect(inverse(eta(1, 7 * order + 5)), 7, 5);  // sum p(7n+5) q^n
    const TruncatedSeries rhs =
        scale(mul(pow(eta(1, order), 3), pow(eta(7, order), 2)), 7);

    for (std::size_t i = 0; i < order; ++i) {
        BigInt d = lhs[i] - rhs[i];
        if (!mpz_divisible_ui_p(d.get_mpz_t(), 49)) {
            r.pass = false;
            r.has_mismatch = true;
            r.mismatch_index = i;
            r.lhs = to_string(lhs[i]);
            r.rhs = to_string(rhs[i]);
            r.note = "difference not divisible by 49";
            return r;
        }
    }

    // The right side has no mass at exponents 2, 4, 5 mod 7 at all, which is
    // what makes the three progressions drop out of the congruence.
    const TruncatedSeries cube = mul(pow(eta(1, order), 3), pow(eta(7, order), 2));
    for (std::size_t s : {2u, 4u, 5u}) {
        if (s >= order) continue;
        if (!dissect(cube, 7, s).is_zero()) {
            r.pass = false;
            r.note = "right side has mass at exponents " + std::to_string(s) + " mod 7";
            return r;
        }
    }

    r.pass = true;
    r.note = "congruence holds and the excluded residue classes vanish exactly";
    return r;
}

}  // namespace w49
