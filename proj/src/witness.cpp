#include "w49/witness.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>

#include "w49/errors.hpp"
#include "w49/matrix.hpp"
#include "w49/qseries.hpp"

namespace w49 {

using json = nlohmann::ordered_json;

TableSchedules theorem_schedules(int r) {
    switch (r) {
        case 19:
            return {{23, -1, 2, 0, 2, 17}, {26, 3, 3, 2, 2, 3},
                    {47, -1, 2, 1, 2, 34}, {49, 3, 3, 1, 2, 7}, 2};
        case 33:
            return {{22, -1, 2, 0, 2, 17}, {25, 3, 3, 2, 2, 3},
                    {46, -1, 2, 1, 2, 34}, {48, 3, 3, 1, 2, 7}, 4};
        case 40:
            return {{21, -1, 2, 1, 2, 16}, {23, 3, 3, 1, 2, 4},
                    {46, -1, 2, 0, 2, 34}, {49, 3, 3, 2, 2, 7}, 5};
        default:
            throw IndexOutOfRange("no witness identity for residue " + std::to_string(r));
    }
}

namespace {

const char* block_names[4] = {"alpha", "beta", "gamma", "delta"};

const ColumnSchedule& block_schedule(const TableSchedules& s, int b) {
    switch (b) {
        case 0: return s.alpha;
        case 1: return s.beta;
        case 2: return s.gamma;
        default: return s.delta;
    }
}

std::vector<BigInt>& block_values(WitnessTable& t, int b) {
    switch (b) {
        case 0: return t.alpha;
        case 1: return t.beta;
        case 2: return t.gamma;
        default: return t.delta;
    }
}

const std::vector<BigInt>& block_values(const WitnessTable& t, int b) {
    switch (b) {
        case 0: return t.alpha;
        case 1: return t.beta;
        case 2: return t.gamma;
        default: return t.delta;
    }
}

BigInt parse_bigint(const json& v, const std::string& where) {
    static const std::regex kInteger("^-?[0-9]+$");
    if (!v.is_string() || !std::regex_match(v.get<std::string>(), kInteger))
        throw ParseError(where + ": expected a decimal integer string, got " + v.dump());
    return BigInt(v.get<std::string>());
}

int schema_int(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw SchemaError(where + ": missing integer field '" + key + "'");
    return obj[key].get<int>();
}

}  // namespace

std::array<WitnessTable, 3> load_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open table data file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("table data file is not valid JSON: " + std::string(e.what()));
    }

    if (!doc.is_object() || doc.value("format", "") != "witness-tables")
        throw SchemaError("table data file: expected format \"witness-tables\"");
    if (doc.value("version", 0) != 1)
        throw SchemaError("table data file: unsupported version");
    if (doc.value("modulus", 0) != 49)
        throw SchemaError("table data file: expected modulus 49");
    if (!doc.contains("tables") || !doc["tables"].is_array() || doc["tables"].size() != 3)
        throw SchemaError("table data file: expected exactly three table entries");

    std::array<WitnessTable, 3> out;
    std::array<bool, 3> seen{};
    for (const json& entry : doc["tables"]) {
        const int r = schema_int(entry, "r", "table entry");
        int slot;
        switch (r) {
            case 19: slot = 0; break;
            case 33: slot = 1; break;
            case 40: slot = 2; break;
            default: throw SchemaError("table entry: unexpected residue " + std::to_string(r));
        }
        if (seen[slot]) throw SchemaError("table entry: duplicate residue " + std::to_string(r));
        seen[slot] = true;

        const TableSchedules sched = theorem_schedules(r);
        WitnessTable t;
        t.r = r;
        for (int b = 0; b < 4; ++b) {
            const std::string where = "r=" + std::to_string(r) + " " + block_names[b];
            if (!entry.contains(block_names[b]) || !entry[block_names[b]].is_object())
                throw SchemaError(where + ": missing block");
            const json& block = entry[block_names[b]];
            const ColumnSchedule& cs = block_schedule(sched, b);

            if (!block.contains("f1") || !block["f1"].is_object())
                throw SchemaError(where + ": missing f1 schedule");
            if (schema_int(block["f1"], "base", where) != cs.f1_base ||
                schema_int(block["f1"], "step", where) != cs.f1_step)
                throw SchemaError(where + ": f1 exponent schedule disagrees");

            const char* partner = cs.partner == 2 ? "f2" : "f3";
            if (!block.contains(partner) || !block[partner].is_object())
                throw SchemaError(where + ": missing " + std::string(partner) + " schedule");
            if (schema_int(block[partner], "base", where) != cs.p_base ||
                schema_int(block[partner], "step", where) != cs.p_step)
                throw SchemaError(where + ": partner exponent schedule disagrees");

            if (!block.contains("values") || !block["values"].is_array())
                throw SchemaError(where + ": missing values array");
            if (block["values"].size() != cs.count)
                throw SchemaError(where + ": expected " + std::to_string(cs.count) +
                                  " values, found " + std::to_string(block["values"].size()));
            std::vector<BigInt>& dst = block_values(t, b);
            dst.reserve(cs.count);
            for (const json& v : block["values"]) dst.push_back(parse_bigint(v, where));
        }
        out[slot] = std::move(t);
    }
    for (int i = 0; i < 3; ++i)
        if (!seen[i]) throw SchemaError("table data file: a residue entry is missing");
    return out;
}

std::string serialize_tables(const std::array<WitnessTable, 3>& tables) {
    json doc;
    doc["format"] = "witness-tables";
    doc["version"] = 1;
    doc["modulus"] = 49;
    doc["tables"] = json::array();
    for (const WitnessTable& t : tables) {
        const TableSchedules sched = theorem_schedules(t.r);
        json entry;
        entry["r"] = t.r;
        entry["progression"] = json{{"step", 49}, {"residue", t.r}};
        for (int b = 0; b < 4; ++b) {
            const ColumnSchedule& cs = block_schedule(sched, b);
            json block;
            json values = json::array();
            for (const BigInt& v : block_values(t, b)) values.push_back(to_string(v));
            block["values"] = std::move(values);
            block["f1"] = json{{"base", cs.f1_base}, {"step", cs.f1_step}};
            block[cs.partner == 2 ? "f2" : "f3"] = json{{"base", cs.p_base}, {"step", cs.p_step}};
            entry[block_names[b]] = std::move(block);
        }
        doc["tables"].push_back(std::move(entry));
    }
    return doc.dump(1) + "\n";
}

namespace {

// sum_j coeffs[j] * F1^(f1_base + j*f1_step) * P^(p_base + j*p_step) with the
// bases at argument q, stepped incrementally along the arithmetic progressions.
TruncatedSeries assemble_column(const std::vector<BigInt>& coeffs, const ColumnSchedule& cs,
                                std::size_t order) {
    TruncatedSeries acc(order);
    if (coeffs.empty()) return acc;
    const TruncatedSeries f1s = f_jk(1, 7, order);
    const TruncatedSeries ps = f_jk(cs.partner == 2 ? 2 : 3, 7, order);
    TruncatedSeries cur = mul(pow(f1s, cs.f1_base), pow(ps, cs.p_base));
    const TruncatedSeries step = mul(pow(f1s, cs.f1_step), pow(ps, cs.p_step));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (j > 0) cur = mul(cur, step);
        acc = add(acc, scale(cur, coeffs[j]));
    }
    return acc;
}

void require_lengths(const WitnessTable& t, const TableSchedules& sched) {
    if (t.alpha.size() != sched.alpha.count || t.beta.size() != sched.beta.count ||
        t.gamma.size() != sched.gamma.count || t.delta.size() != sched.delta.count)
        throw SchemaError("witness table lengths disagree with the identity schedules");
}

CheckReport report_from(std::string name, std::size_t order, const EqReport& eq) {
    CheckReport r;
    r.name = std::move(name);
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

TruncatedSeries rhs_series(const WitnessTable& table, std::size_t order) {
    const TableSchedules sched = theorem_schedules(table.r);
    require_lengths(table, sched);
    const TruncatedSeries p1 = add(assemble_column(table.alpha, sched.alpha, order),
                                   assemble_column(table.beta, sched.beta, order));
    const TruncatedSeries p2 = add(assemble_column(table.gamma, sched.gamma, order),
                                   assemble_column(table.delta, sched.delta, order));
    const TruncatedSeries q28 = eval_eta_quotient({{{7, 28}, {1, -28}}}, order);
    const TruncatedSeries q29 = eval_eta_quotient({{{7, 28}, {1, -29}}}, order);
    return scale(mul(q29, add(p1, mul(q28, p2))), 49);
}

CheckReport verify_theorem(const WitnessTable& table, std::size_t order) {
    const std::size_t r = static_cast<std::size_t>(table.r);
    const TruncatedSeries lhs = dissect(inverse(eta(1, 49 * order + r)), 49, r);
    const TruncatedSeries rhs = rhs_series(table, order);
    return report_from("theorem" + std::to_string(table.r), order,
                       eq_upto(lhs, rhs, order));
}

CheckReport verify_witness_7n5(std::size_t order) {
    const TruncatedSeries lhs = dissect(inverse(eta(1, 7 * order + 5)), 7, 5);
    const TruncatedSeries rhs =
        add(scale(eval_eta_quotient({{{7, 3}, {1, -4}}}, order), 7),
            scale(shift(eval_eta_quotient({{{7, 7}, {1, -8}}}, order), 1), 49));
    return report_from("witness7n5", order, eq_upto(lhs, rhs, order));
}

namespace {

struct CofactorSet {
    PolyMatrix matrix;          // the circulant grouping of the ell-th power
    std::array<ReducedForm, 7> reduced;  // first-row cofactors, normal form
};

// The cofactors of one grouped matrix are reused across the three residues,
// so they are computed once per ell.
const CofactorSet& cofactor_set(int ell) {
    static std::mutex mu;
    static std::map<int, CofactorSet> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ell);
    if (it != cache.end()) return it->second;

    PolyMatrix a = build_matrix_A_general(ell);
    const PolyMatrix wp = matrix_power(build_matrix_W(), static_cast<unsigned>(ell));
    if (!(wp == a))
        throw PipelineMismatch("structured matrix power " + std::to_string(ell) +
                               " disagrees with the grouped expansion");
    CofactorSet set{std::move(a), {}};
    for (int col = 1; col <= 7; ++col)
        set.reduced[col - 1] = reduce(cofactor_first_row(set.matrix, col));
    return cache.emplace(ell, std::move(set)).first->second;
}

}  // namespace

DerivationResult derive_component(int ell, int target_q_residue, std::size_t order) {
    if (ell != 4 && ell != 8)
        throw std::invalid_argument("derivation power must be 4 or 8");
    if (target_q_residue < 0 || target_q_residue > 6)
        throw IndexOutOfRange("component index " + std::to_string(target_q_residue));

    const CofactorSet& set = cofactor_set(ell);

    // Independent series path: the full quotient, dissected at the target.
    const TruncatedSeries full =
        eval_eta_quotient({{{7, 8 * ell}, {49, -ell}, {1, -ell}}}, order);
    const TruncatedSeries target = dissect(full, 7, static_cast<std::size_t>(target_q_residue));

    const int f49_exp = 7 * ell - ell;
    const TruncatedSeries f49p = pow(eta(49, order), f49_exp);

    std::string mismatch;
    for (int col = 1; col <= 7; ++col) {
        const ReducedForm& rf = set.reduced[col - 1];
        if (rf.residue != target_q_residue || rf.poly.is_zero()) continue;
        const TruncatedSeries sym = dissect(mul(eval_poly(embed(rf), order), f49p), 7,
                                            static_cast<std::size_t>(target_q_residue));
        const std::size_t n = std::min(sym.order(), target.order());
        const EqReport eq = eq_upto(sym, target, n);
        if (eq.equal) {
            DerivationResult res;
            res.ell = ell;
            res.residue_slot = target_q_residue;
            res.selected_column = col;
            res.symbolic = rf;
            res.component = target;
            res.f49_exponent = f49_exp;
            res.order = order;
            return res;
        }
        mismatch = "column " + std::to_string(col) + " reduces to the right residue but"
                   " diverges at coefficient " + std::to_string(eq.index) + ": " +
                   to_string(eq.lhs) + " vs " + to_string(eq.rhs);
    }
    if (mismatch.empty())
        mismatch = "no first-row cofactor reduces to residue " +
                   std::to_string(target_q_residue);
    throw PipelineMismatch("derivation (power " + std::to_string(ell) + ", component " +
                           std::to_string(target_q_residue) + "): " + mismatch);
}

std::pair<std::vector<BigInt>, std::vector<BigInt>> match_schedule(
    const ReducedForm& rf, const ColumnSchedule& first, const ColumnSchedule& second,
    const BigInt& divisor) {
    if (first.partner != 2 || second.partner != 3)
        throw std::invalid_argument("schedule matching expects an F2 column then an F3 column");

    std::vector<BigInt> col_a(first.count), col_b(second.count);
    for (const auto& [m, c] : rf.poly.terms()) {
        if (m.e3 != 0 || m.eq != 0)
            throw ScheduleMismatch("reduced form still carries F3 or q exponents");
        if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
            throw ScheduleMismatch("coefficient " + to_string(c) + " of " +
                                   "F1^" + std::to_string(m.e1) + " F2^" + std::to_string(m.e2) +
                                   " is not divisible by " + to_string(divisor));
        const BigInt v = c / divisor;

        if (m.e2 >= 0) {
            const int num = m.e2 - first.p_base;
            if (first.p_step == 0 || num % first.p_step != 0)
                throw ScheduleMismatch("partner exponent " + std::to_string(m.e2) +
                                       " is off the schedule lattice");
            const int j = num / first.p_step;
            if (j < 0 || static_cast<std::size_t>(j) >= first.count)
                throw ScheduleMismatch("schedule index " + std::to_string(j) + " out of range");
            if (m.e1 != first.f1_base + first.f1_step * j)
                throw ScheduleMismatch("F1 exponent " + std::to_string(m.e1) +
                                       " disagrees with the schedule at index " + std::to_string(j));
            col_a[static_cast<std::size_t>(j)] = v;
        } else {
            const int e3 = -m.e2;  // the F3 exponent before elimination
            const int num = e3 - second.p_base;
            if (second.p_step == 0 || num % second.p_step != 0)
                throw ScheduleMismatch("partner exponent " + std::to_string(e3) +
                                       " is off the schedule lattice");
            const int j = num / second.p_step;
            if (j < 0 || static_cast<std::size_t>(j) >= second.count)
                throw ScheduleMismatch("schedule index " + std::to_string(j) + " out of range");
            if (m.e1 != second.f1_base + second.f1_step * j - e3)
                throw ScheduleMismatch("F1 exponent " + std::to_string(m.e1) +
                                       " disagrees with the schedule at index " + std::to_string(j));
            col_b[static_cast<std::size_t>(j)] = v;
        }
    }
    return {std::move(col_a), std::move(col_b)};
}

std::array<WitnessTable, 3> regenerate_tables(std::size_t order) {
    std::array<WitnessTable, 3> out;
    int slot = 0;
    for (const int r : {19, 33, 40}) {
        const TableSchedules sched = theorem_schedules(r);
        const int m = sched.progression_residue;

        const DerivationResult quartic = derive_component(4, m, order);
        auto [alpha, beta] = match_schedule(quartic.symbolic, sched.alpha, sched.beta, BigInt(7));

        const DerivationResult octic = derive_component(8, (m + 6) % 7, order);
        auto [gamma, delta] = match_schedule(octic.symbolic, sched.gamma, sched.delta, BigInt(1));

        out[slot].r = r;
        out[slot].alpha = std::move(alpha);
        out[slot].beta = std::move(beta);
        out[slot].gamma = std::move(gamma);
        out[slot].delta = std::move(delta);
        ++slot;
    }
    return out;
}

}  // namespace w49
