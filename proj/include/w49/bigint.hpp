#pragma once

#include <gmpxx.h>

#include <string>

namespace w49 {

// Arbitrary-precision signed integer. Every coefficient in the system is one
// of these; nothing is ever allowed to pass through a machine word.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace w49
