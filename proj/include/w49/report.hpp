#pragma once

#include <cstddef>
#include <string>

namespace w49 {

// Uniform result record for identity checks: pass/fail plus enough diagnostic
// data to locate the first disagreement.
struct CheckReport {
    std::string name;
    bool pass = false;
    std::size_t order = 0;
    bool has_mismatch = false;
    std::size_t mismatch_index = 0;
    std::string lhs, rhs;  // decimal strings of the first differing coefficients
    std::string note;
};

}  // namespace w49
