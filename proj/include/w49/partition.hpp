#pragma once

#include <cstddef>
#include <vector>

#include "w49/bigint.hpp"
#include "w49/report.hpp"

namespace w49 {

// p(0..N) by the Euler pentagonal recurrence. The series-inverse path
// (inverse(eta(1))) is independent; the tests require exact agreement.
std::vector<BigInt> partition_numbers(std::size_t N);

// Two-color counts p_{1,r}(0..N): partitions where parts divisible by r come
// in two colors. Generating function 1/(f1 * fr).
std::vector<BigInt> two_color_numbers(unsigned r, std::size_t N);

// Claim: for 0 <= n < count, values[step*n + residue] is divisible by modulus.
struct CongruenceClaim {
    unsigned long modulus = 1;
    unsigned long step = 1;
    unsigned long residue = 0;
    std::size_t count = 0;
};

struct CongruenceEntry {
    std::size_t n = 0;
    BigInt value;
    BigInt quotient;  // value / modulus when divisible, else truncated quotient
    bool divisible = false;
};

struct CongruenceReport {
    CongruenceClaim claim;
    bool pass = false;
    std::vector<CongruenceEntry> entries;  // one per n, in order
};

// Throws InsufficientData when values does not cover step*(count-1)+residue.
CongruenceReport check_congruence(const std::vector<BigInt>& values,
                                  const CongruenceClaim& claim);

// Checks sum p(7n+5) q^n == 7 f1^3 f7^2 (mod 49) coefficientwise to the given
// order, and that the right side dissected at residues 2, 4, 5 mod 7 vanishes.
CheckReport verify_step1_mod49(std::size_t order);

}  // namespace w49
