#include "helpers.hpp"

#include "mincode/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace mincode;
using namespace testutil;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("construct writes a verified matrix") {
    auto path = temp_file("cli_even_lines.mtx");
    auto r = run_cli({"construct", "even-lines", "--q", "2", "--k", "6", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("verified minimal [27, 6, 10]_2") != std::string::npos);
    auto code = parse_matrix_file(slurp(path));
    CHECK(code.n() == 27);
    CHECK(code.k() == 6);
    CHECK(is_minimal_code(code).minimal);
    std::filesystem::remove(path);
}

TEST_CASE("construct tetrahedron reports the exact distance") {
    auto r = run_cli({"construct", "tetrahedron", "--q", "3", "--k", "4", "--json"});
    CHECK(r.code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j["kind"] == "construction");
    CHECK(j["results"]["n"] == 16);
    CHECK(j["results"]["verified_d"] == 7);
    CHECK(j["results"]["expected_d_exact"] == true);
}

TEST_CASE("construct preconditions exit with code 1 and name the constraint") {
    auto r = run_cli({"construct", "rnt", "--q", "3", "--k", "4"});
    CHECK(r.code == 1);
    CHECK(r.err.find("q >= 2k-3") != std::string::npos);

    auto r2 = run_cli({"construct", "nosuch", "--q", "2", "--k", "3"});
    CHECK(r2.code == 1);
    CHECK(r2.err.find("unknown construction") != std::string::npos);
}

TEST_CASE("construct honors the enumeration limit") {
    auto r = run_cli({"--max-enum", "10", "construct", "even-lines", "--q", "2", "--k", "6"});
    CHECK(r.code == 1);
    CHECK(r.err.find("max-enum") != std::string::npos);
}

TEST_CASE("lift names compose") {
    auto r = run_cli({"construct", "lift:even-lines", "--q", "2", "--k", "5", "--json"});
    CHECK(r.code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j["params"]["name"] == "lift:even-lines");
    CHECK(j["results"]["n"] == 17);
}

TEST_CASE("analyze a fixture file") {
    auto r = run_cli({"analyze", data_path("m14_4_q3.mtx"), "--json"});
    CHECK(r.code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j["kind"] == "analysis");
    CHECK(j["results"]["d"] == 7);
    CHECK(j["results"]["w_max"] == 11);
    CHECK(j["results"]["minimality"]["minimal"] == true);
    CHECK(j["results"]["projective"] == true);
    CHECK(j["results"]["mean"]["num"] == 189);
    CHECK(j["results"]["mean"]["den"] == 20);
    CHECK(j["results"]["second_moment"]["lhs"] == j["results"]["second_moment"]["rhs"]);
}

TEST_CASE("analyze reports witnesses for non-minimal codes") {
    auto path = temp_file("cli_identity.mtx");
    {
        auto f2 = Field::make(2, 1);
        LinearCode c(f2, Matrix::identity(f2, 2));
        std::ofstream out(path);
        out << emit_matrix_file(c);
    }
    auto r = run_cli({"analyze", path, "--json"});
    CHECK(r.code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j["results"]["minimality"]["minimal"] == false);
    CHECK(j["results"]["minimality"].contains("witness_outer"));
    std::filesystem::remove(path);
}

TEST_CASE("analyze optional sections") {
    auto r = run_cli({"analyze", data_path("m14_4_q3.mtx"), "--support-poly", "1", "--witnesses",
                      "1", "--json"});
    CHECK(r.code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j["results"]["support_poly"]["nonzero_count"] == 2);
    CHECK(j["results"]["support_poly"]["canonical_agrees"] == true);
    auto ws = j["results"]["overlap_witnesses"];
    CHECK(ws.size() == 7);
    for (const auto& w : ws) CHECK(w["found"] == true);
}

TEST_CASE("analyze rejects malformed files with exit 1") {
    auto path = temp_file("cli_bad.mtx");
    {
        std::ofstream out(path);
        out << "3 1 0 2 3\n1 0 x\n0 1 0\n";
    }
    auto r = run_cli({"analyze", path});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 2") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("bounds exit codes distinguish feasible from infeasible") {
    auto bad = run_cli({"bounds", "--q", "4", "--k", "4", "--n", "16"});
    CHECK(bad.code == 3);
    CHECK(bad.out.find("stat_quadratic: value -42, VIOLATED") != std::string::npos);

    auto good = run_cli({"bounds", "--q", "4", "--k", "4", "--n", "17"});
    CHECK(good.code == 0);
}

TEST_CASE("bounds reports the two-weight window") {
    auto r = run_cli({"bounds", "--q", "2", "--k", "8", "--d", "16", "--w", "24", "--json"});
    CHECK(r.code == 0);
    auto j = ordered_json::parse(r.out);
    bool lo = false, hi = false;
    for (const auto& v : j["results"]["verdicts"]) {
        if (v["name"] == "bhatia_davis_lower_n") {
            CHECK(v["value"] == 34);
            lo = true;
        }
        if (v["name"] == "bhatia_davis_upper_n") {
            CHECK(v["value"] == 45);
            hi = true;
        }
    }
    CHECK(lo);
    CHECK(hi);
}

TEST_CASE("mtable emits CSV") {
    auto path = temp_file("cli_mtable.csv");
    auto r = run_cli({"mtable", "--q", "4", "--kmax", "6", "--csv", path});
    CHECK(r.code == 0);
    auto csv = slurp(path);
    CHECK(csv.find("4,6,26,stat_quadratic,45,even-lines") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("construct output re-read by analyze reproduces the parameters") {
    auto path = temp_file("cli_roundtrip.mtx");
    auto c = run_cli({"construct", "tetrahedron", "--q", "2", "--k", "3", "--out", path,
                      "--json"});
    CHECK(c.code == 0);
    auto jc = ordered_json::parse(c.out);
    auto a = run_cli({"analyze", path, "--json"});
    CHECK(a.code == 0);
    auto ja = ordered_json::parse(a.out);
    CHECK(ja["results"]["n"] == jc["results"]["n"]);
    CHECK(ja["results"]["d"] == jc["results"]["verified_d"]);
    CHECK(ja["results"]["minimality"]["minimal"] == true);
    std::filesystem::remove(path);
}

TEST_CASE("identical invocations produce identical bytes") {
    auto a = run_cli({"construct", "best", "--q", "2", "--k", "6", "--json"});
    auto b = run_cli({"construct", "best", "--q", "2", "--k", "6", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    auto c = run_cli({"--threads", "1", "analyze", data_path("m27_6_q2.mtx"), "--json"});
    auto d = run_cli({"--threads", "2", "analyze", data_path("m27_6_q2.mtx"), "--json"});
    CHECK(c.out == d.out);
}

TEST_CASE("help exits cleanly") {
    auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("construct") != std::string::npos);
}
