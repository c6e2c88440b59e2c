#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "w49/errors.hpp"
#include "w49/partition.hpp"
#include "w49/witness.hpp"

using w49::BigInt;
using w49::WitnessTable;
using json = nlohmann::ordered_json;

#ifndef W49_TEST_TABLES
#error "W49_TEST_TABLES must point at the shipped data file"
#endif

namespace {

const std::string kDataPath = W49_TEST_TABLES;

json load_doc() {
    std::ifstream in(kDataPath);
    REQUIRE(in.good());
    return json::parse(in);
}

std::string write_temp(const json& doc) {
    static int counter = 0;
    const std::filesystem::path p =
        std::filesystem::temp_directory_path() /
        ("w49_tables_" + std::to_string(++counter) + ".json");
    std::ofstream out(p);
    out << doc.dump(1);
    return p.string();
}

std::string write_temp_raw(const std::string& text) {
    static int counter = 0;
    const std::filesystem::path p =
        std::filesystem::temp_directory_path() /
        ("w49_raw_" + std::to_string(++counter) + ".json");
    std::ofstream out(p);
    out << text;
    return p.string();
}

BigInt table_sum(const WitnessTable& t) {
    BigInt s = 0;
    for (const auto* col : {&t.alpha, &t.beta, &t.gamma, &t.delta})
        for (const BigInt& v : *col) s += v;
    return s;
}

}  // namespace

TEST_CASE("schedules of the three identities") {
    const w49::TableSchedules s19 = w49::theorem_schedules(19);
    CHECK(s19.progression_residue == 2);
    CHECK(s19.alpha.f1_base == 23);
    CHECK(s19.alpha.f1_step == -1);
    CHECK(s19.alpha.partner == 2);
    CHECK(s19.alpha.count == 17);
    CHECK(s19.beta.partner == 3);
    CHECK(s19.beta.count == 3);
    CHECK(s19.gamma.count == 34);
    CHECK(s19.delta.count == 7);

    const w49::TableSchedules s40 = w49::theorem_schedules(40);
    CHECK(s40.progression_residue == 5);
    CHECK(s40.alpha.count == 16);
    CHECK(s40.beta.count == 4);
    CHECK(s40.alpha.f1_base == 21);
    CHECK(s40.alpha.p_base == 1);

    CHECK_THROWS_AS((void)w49::theorem_schedules(20), w49::IndexOutOfRange);
}

TEST_CASE("loading the shipped tables") {
    const std::array<WitnessTable, 3> tables = w49::load_tables(kDataPath);
    CHECK(tables[0].r == 19);
    CHECK(tables[1].r == 33);
    CHECK(tables[2].r == 40);
    CHECK(tables[0].alpha.size() == 17);
    CHECK(tables[0].beta.size() == 3);
    CHECK(tables[0].gamma.size() == 34);
    CHECK(tables[0].delta.size() == 7);
    CHECK(tables[2].alpha.size() == 16);
    CHECK(tables[2].beta.size() == 4);
    CHECK(tables[0].alpha[0] == -532544);

    // Constant-term consistency: 49 * (sum of all table values) = p(r).
    const std::vector<BigInt> p = w49::partition_numbers(40);
    CHECK(49 * table_sum(tables[0]) == p[19]);
    CHECK(49 * table_sum(tables[1]) == p[33]);
    CHECK(49 * table_sum(tables[2]) == p[40]);
}

TEST_CASE("loader rejects malformed documents") {
    CHECK_THROWS_AS((void)w49::load_tables("/nonexistent/tables.json"), w49::ParseError);
    CHECK_THROWS_AS((void)w49::load_tables(write_temp_raw("not json at all {")),
                    w49::ParseError);

    json doc = load_doc();
    doc["format"] = "other";
    CHECK_THROWS_AS((void)w49::load_tables(write_temp(doc)), w49::SchemaError);

    doc = load_doc();
    doc["version"] = 2;
    CHECK_THROWS_AS((void)w49::load_tables(write_temp(doc)), w49::SchemaError);

    doc = load_doc();
    doc["tables"][0]["alpha"]["values"].erase(0);
    CHECK_THROWS_AS((void)w49::load_tables(write_temp(doc)), w49::SchemaError);

    doc = load_doc();
    doc["tables"][0]["alpha"]["values"][0] = "12x";
    CHECK_THROWS_AS((void)w49::load_tables(write_temp(doc)), w49::ParseError);

    doc = load_doc();
    doc["tables"][0]["alpha"]["f1"]["base"] = 99;
    CHECK_THROWS_AS((void)w49::load_tables(write_temp(doc)), w49::SchemaError);

    doc = load_doc();
    doc["tables"][0]["r"] = 20;
    CHECK_THROWS_AS((void)w49::load_tables(write_temp(doc)), w49::SchemaError);

    doc = load_doc();
    doc["tables"][1] = doc["tables"][0];
    CHECK_THROWS_AS((void)w49::load_tables(write_temp(doc)), w49::SchemaError);
}

TEST_CASE("serialization round-trips") {
    const std::array<WitnessTable, 3> tables = w49::load_tables(kDataPath);
    const std::string text = w49::serialize_tables(tables);
    const std::string path = write_temp_raw(text);
    const std::array<WitnessTable, 3> again = w49::load_tables(path);
    CHECK(again == tables);
}

TEST_CASE("right side matches the partition progression directly") {
    const std::array<WitnessTable, 3> tables = w49::load_tables(kDataPath);
    const std::vector<BigInt> p = w49::partition_numbers(49 * 8 + 40);
    for (const WitnessTable& t : tables) {
        const w49::TruncatedSeries rhs = w49::rhs_series(t, 9);
        for (std::size_t n = 0; n <= 8; ++n)
            CHECK(rhs.coeff(n) == p[49 * n + static_cast<std::size_t>(t.r)]);
    }
}

TEST_CASE("verify_theorem") {
    const std::array<WitnessTable, 3> tables = w49::load_tables(kDataPath);
    for (const WitnessTable& t : tables) {
        const w49::CheckReport rep = w49::verify_theorem(t, 40);
        CHECK(rep.pass);
        CHECK(rep.name == "theorem" + std::to_string(t.r));
    }

    WitnessTable bad = tables[0];
    bad.alpha[0] += 1;
    const w49::CheckReport rep = w49::verify_theorem(bad, 5);
    CHECK_FALSE(rep.pass);
    CHECK(rep.has_mismatch);
    CHECK(rep.mismatch_index == 0);
}

TEST_CASE("the mod-7 witness identity") {
    CHECK(w49::verify_witness_7n5(150).pass);
}

TEST_CASE("derive_component runs both powers") {
    const w49::DerivationResult d4 = w49::derive_component(4, 2, 100);
    CHECK(d4.selected_column == 3);
    CHECK(d4.residue_slot == 2);
    CHECK(d4.f49_exponent == 24);
    CHECK(d4.symbolic.residue == 2);
    CHECK(d4.symbolic.poly.term_count() == 20);

    const w49::DerivationResult d8 = w49::derive_component(8, 1, 100);
    CHECK(d8.selected_column == 2);
    CHECK(d8.f49_exponent == 48);
    CHECK(d8.symbolic.poly.term_count() == 41);

    CHECK_THROWS_AS((void)w49::derive_component(5, 2, 50), std::invalid_argument);
    CHECK_THROWS_AS((void)w49::derive_component(4, 7, 50), w49::IndexOutOfRange);
}

TEST_CASE("derived forms match the shipped tables") {
    const std::array<WitnessTable, 3> tables = w49::load_tables(kDataPath);
    const w49::TableSchedules sched = w49::theorem_schedules(19);

    const w49::DerivationResult d4 = w49::derive_component(4, 2, 100);
    const auto [alpha, beta] =
        w49::match_schedule(d4.symbolic, sched.alpha, sched.beta, BigInt(7));
    CHECK(alpha == tables[0].alpha);
    CHECK(beta == tables[0].beta);

    const w49::DerivationResult d8 = w49::derive_component(8, 1, 100);
    const auto [gamma, delta] =
        w49::match_schedule(d8.symbolic, sched.gamma, sched.delta, BigInt(1));
    CHECK(gamma == tables[0].gamma);
    CHECK(delta == tables[0].delta);
}

TEST_CASE("match_schedule rejects off-lattice input") {
    const w49::DerivationResult d4 = w49::derive_component(4, 2, 100);
    const w49::TableSchedules sched = w49::theorem_schedules(19);

    // wrong divisor: the quartic coefficients are multiples of 7, not 49
    CHECK_THROWS_AS(
        (void)w49::match_schedule(d4.symbolic, sched.alpha, sched.beta, BigInt(49)),
        w49::ScheduleMismatch);

    // schedules from the wrong identity do not fit
    const w49::TableSchedules other = w49::theorem_schedules(33);
    CHECK_THROWS_AS(
        (void)w49::match_schedule(d4.symbolic, other.alpha, other.beta, BigInt(7)),
        w49::ScheduleMismatch);

    // the F2 column must come first
    CHECK_THROWS_AS(
        (void)w49::match_schedule(d4.symbolic, sched.beta, sched.alpha, BigInt(7)),
        std::invalid_argument);
}

TEST_CASE("regeneration reproduces the shipped data") {
    const std::array<WitnessTable, 3> shipped = w49::load_tables(kDataPath);
    const std::array<WitnessTable, 3> derived = w49::regenerate_tables(80);
    CHECK(derived == shipped);
}
