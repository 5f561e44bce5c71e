#include "helpers.hpp"

#include <doctest.h>

using namespace mincode;
using namespace testutil;

TEST_CASE("matrix files round-trip byte-identically") {
    auto text = slurp(data_path("m14_4_q3.mtx"));
    auto code = parse_matrix_file(text);
    CHECK(code.n() == 14);
    CHECK(code.k() == 4);
    CHECK(code.field()->q() == 3);
    CHECK(emit_matrix_file(code) == text);

    auto text2 = slurp(data_path("m27_6_q2.mtx"));
    CHECK(emit_matrix_file(parse_matrix_file(text2)) == text2);
}

TEST_CASE("extension field matrix files carry the modulus") {
    auto f4 = Field::make(2, 2);
    LinearCode c(f4, Matrix::from_rows(f4, {{1, 0, 2}, {0, 1, 3}}));
    auto text = emit_matrix_file(c);
    CHECK(text == "2 2 7 2 3\n1 0 2\n0 1 3\n");
    auto back = parse_matrix_file(text);
    CHECK(back.generator() == c.generator());
    CHECK(emit_matrix_file(back) == text);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_matrix_file("3 1 0 2 3\n1 0 x\n0 1 0\n");
        FAIL("expected a parse error");
    } catch (const parse_error& ex) {
        CHECK(ex.line == 2);
        CHECK(ex.column == 5);
    }
    try {
        parse_matrix_file("3 1 0 2 3\n1 0 5\n0 1 0\n");
        FAIL("expected a parse error");
    } catch (const parse_error& ex) {
        CHECK(ex.line == 2); // element out of range
        CHECK(ex.column == 3);
    }
    CHECK_THROWS_AS(parse_matrix_file(""), parse_error);
    CHECK_THROWS_AS(parse_matrix_file("3 1 0 2\n"), parse_error);          // short header
    CHECK_THROWS_AS(parse_matrix_file("3 1 0 2 3\n1 0 0\n"), parse_error); // missing row
    CHECK_THROWS_AS(parse_matrix_file("4 1 0 1 1\n1\n"), parse_error);     // p not prime
    CHECK_THROWS_AS(parse_matrix_file("3 1 0 2 3\n1  0 0\n0 1 0\n"), parse_error); // double blank
    // Rank-deficient generator matrices are rejected.
    CHECK_THROWS_AS(parse_matrix_file("2 1 0 2 2\n1 1\n1 1\n"), parse_error);
}

TEST_CASE("big integers and rationals in JSON") {
    CHECK(json_of_bigint(BigInt(42)) == 42);
    CHECK(json_of_bigint(-BigInt(7)) == -7);
    BigInt big = big_pow(2, 100);
    CHECK(json_of_bigint(big).is_string());
    CHECK(json_of_bigint(big).get<std::string>() == big.str());
    auto j = json_of_rational(Rational(189, 20));
    CHECK(j["num"] == 189);
    CHECK(j["den"] == 20);
}

TEST_CASE("report envelopes have the fixed key order") {
    auto j = report_envelope("analysis", ordered_json::object(), ordered_json::object(), {});
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"schema_version", "kind", "params", "results",
                                           "citations"});
    CHECK(j["schema_version"] == "1");
}

TEST_CASE("construction reports serialize deterministically") {
    auto r = tetrahedron(3, 3);
    auto j1 = json_of_construction(r).dump(2);
    auto j2 = json_of_construction(tetrahedron(3, 3)).dump(2);
    CHECK(j1 == j2);
    auto j = json_of_construction(r);
    CHECK(j["kind"] == "construction");
    CHECK(j["results"]["verified_minimal"] == true);
    CHECK(j["results"]["n"] == 9); // (q-1) C(3,2) + 3 = 3q
}

TEST_CASE("feasibility and m-table serialization") {
    FeasibilityParams p;
    p.q = 4;
    p.k = 4;
    p.n = 16;
    auto rep = feasibility(p);
    auto j = json_of_feasibility(rep);
    CHECK(j["kind"] == "feasibility");
    CHECK(j["results"]["overall"]["feasible"] == false);
    CHECK(j["results"]["overall"]["witness"] == "stat_quadratic");
    bool found = false;
    for (const auto& v : j["results"]["verdicts"])
        if (v["name"] == "stat_quadratic") {
            CHECK(v["value"] == -42);
            found = true;
        }
    CHECK(found);

    auto rows = m_table(4, 6);
    auto jt = json_of_mtable(rows);
    CHECK(jt["kind"] == "mtable");
    CHECK(jt["results"]["rows"].size() == 5);
    auto csv = csv_of_mtable(rows);
    CHECK(csv.find("4,6,26,stat_quadratic,45,even-lines") != std::string::npos);
    CHECK(csv_of_mtable(m_table(4, 6)) == csv);
}
