#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "w49/bigint.hpp"
#include "w49/report.hpp"
#include "w49/series.hpp"
#include "w49/symbolic.hpp"

namespace w49 {

// One summation column of a witness identity: coefficient j multiplies
// F1^(f1_base + f1_step*j) * P^(p_base + p_step*j) where P is F2 or F3.
struct ColumnSchedule {
    int f1_base = 0, f1_step = 0;
    int partner = 2;  // 2 -> F2, 3 -> F3
    int p_base = 0, p_step = 0;
    std::size_t count = 0;
};

struct TableSchedules {
    ColumnSchedule alpha, beta, gamma, delta;
    int progression_residue = 0;  // m in p_i(7n+m)
};

// The fixed exponent schedules of the three witness identities;
// r in {19, 33, 40}, IndexOutOfRange otherwise.
TableSchedules theorem_schedules(int r);

struct WitnessTable {
    int r = 0;
    std::vector<BigInt> alpha, beta, gamma, delta;
    friend bool operator==(const WitnessTable&, const WitnessTable&) = default;
};

// Reads the JSON data document. SchemaError for structural problems (wrong
// lengths, wrong schedules, missing fields), ParseError for malformed JSON or
// non-integer values.
std::array<WitnessTable, 3> load_tables(const std::string& path);

// Serializes tables with their schedule metadata; load_tables round-trips it.
std::string serialize_tables(const std::array<WitnessTable, 3>& tables);

// The full right side of the witness identity for table.r, with the
// dissection quotients at argument q, as an exact series.
TruncatedSeries rhs_series(const WitnessTable& table, std::size_t order);

// dissect(inverse(f1), 49, r) == rhs_series(table, order), coefficient-exact.
CheckReport verify_theorem(const WitnessTable& table, std::size_t order);

// sum p(7n+5) q^n == 7 f7^3/f1^4 + 49 q f7^7/f1^8, coefficient-exact.
CheckReport verify_witness_7n5(std::size_t order);

struct DerivationResult {
    int ell = 0;
    int residue_slot = 0;     // dissection component index 0..6
    int selected_column = 0;  // 1-based cofactor column that matched
    ReducedForm symbolic;
    // series path: the dissection component the cofactor was matched against
    TruncatedSeries component = TruncatedSeries(1);
    int f49_exponent = 0;       // power of f49 applied to the cofactor
    std::size_t order = 0;      // working order of the series cross-check
};

// Runs the matrix pipeline for one component: group the quadrinomial power
// into the circulant matrix, confirm it equals the corresponding power of the
// structured matrix, pick the first-row cofactor empirically (reduced residue
// as pre-filter, series dissection as decider), scale by f49^(6*ell), reduce.
// Throws PipelineMismatch when the symbolic and series paths disagree.
DerivationResult derive_component(int ell, int target_q_residue, std::size_t order = 400);

// Splits a reduced form into the two schedule columns (F2 branch, F3 branch),
// dividing every coefficient by `divisor` first. ScheduleMismatch when a
// monomial lands outside the schedules or a coefficient is not divisible.
std::pair<std::vector<BigInt>, std::vector<BigInt>> match_schedule(
    const ReducedForm& rf, const ColumnSchedule& first, const ColumnSchedule& second,
    const BigInt& divisor);

// Re-derives all three tables through derive_component (ell = 4 and 8, one
// component each per r). The result must equal load_tables output exactly.
std::array<WitnessTable, 3> regenerate_tables(std::size_t order = 400);

}  // namespace w49
