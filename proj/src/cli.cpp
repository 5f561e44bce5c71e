#include "mincode/cli.hpp"

#include "mincode/io.hpp"
#include "mincode/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace mincode::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_verification = 2;
constexpr int exit_infeasible = 3;

std::string show(const Rational& v) {
    if (boost::multiprecision::denominator(v) == 1)
        return boost::multiprecision::numerator(v).str();
    return to_string(v);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw precondition_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw precondition_error("cannot write " + path);
    out << content;
}

ConstructionReport dispatch_construct(const std::string& name, std::uint64_t q, std::size_t k,
                                      std::uint64_t max_enum) {
    if (name.rfind("lift:", 0) == 0) {
        // The inner construction is built for the same q at dimension k-1.
        if (k < 3) throw precondition_error("lift needs k >= 3");
        ConstructionReport inner = dispatch_construct(name.substr(5), q, k - 1, max_enum);
        return lift(inner, max_enum);
    }
    if (name == "tetrahedron") return tetrahedron(q, k, max_enum);
    if (name == "rnt") return rational_normal_tangent(q, k, max_enum);
    if (name == "even-lines") return even_lines_code(q, k, max_enum);
    if (name == "baer") return baer_code(q, k, max_enum);
    if (name == "best") return best_known(q, k, max_enum);
    throw precondition_error("unknown construction '" + name +
                             "' (expected tetrahedron, rnt, even-lines, baer, lift:<inner>, "
                             "or best)");
}

ordered_json json_of_analysis(const LinearCode& code, const WeightProfile& profile,
                              const MinimalityResult& minimal, const PlessSecondMoment& pless,
                              bool nondeg, bool projective) {
    ordered_json params;
    params["p"] = code.field()->p();
    params["e"] = code.field()->e();
    params["q"] = code.field()->q();
    params["modulus"] = code.field()->e() == 1 ? 0 : code.field()->modulus();
    params["n"] = code.n();
    params["k"] = code.k();

    ordered_json results;
    results["n"] = code.n();
    results["k"] = code.k();
    results["d"] = profile.d;
    results["w_max"] = profile.w_max;
    results["s"] = profile.num_distinct_nonzero_weights;
    results["mean"] = json_of_rational(profile.mean);
    results["variance"] = json_of_rational(profile.variance);
    results["nondegenerate"] = nondeg;
    results["projective"] = projective;
    ordered_json jmin;
    jmin["minimal"] = minimal.minimal;
    if (minimal.witness) {
        jmin["witness_outer"] = minimal.witness->outer;
        jmin["witness_inner"] = minimal.witness->inner;
    }
    results["minimality"] = std::move(jmin);
    ordered_json jp;
    jp["lhs"] = json_of_rational(pless.lhs);
    jp["rhs"] = json_of_rational(pless.rhs);
    jp["margin"] = json_of_rational(pless.margin);
    jp["w1_dual"] = pless.w1_dual;
    jp["w2_dual"] = pless.w2_dual;
    results["second_moment"] = std::move(jp);

    std::vector<std::string> citations{
        "weights by exact enumeration of scalar classes",
        "minimality by the rank criterion on complement columns",
        "second moment by the dual-weight expansion"};
    return report_envelope("analysis", std::move(params), std::move(results),
                           std::move(citations));
}

void print_human_construction(std::ostream& out, const ConstructionReport& r) {
    out << r.name << ": verified minimal [" << r.pointset.size() << ", " << r.k << ", "
        << r.verified_d << "]_" << r.q << " code";
    if (r.expected_d) {
        out << " (formula d " << (r.expected_d->exact ? "= " : ">= ")
            << r.expected_d->value.str() << ")";
    }
    out << "\n";
}

int cmd_construct(const std::string& name, std::uint64_t q, std::size_t k,
                  const std::string& out_path, const std::string& report_path, bool json,
                  std::uint64_t max_enum, std::ostream& out) {
    ConstructionReport report = dispatch_construct(name, q, k, max_enum);
    std::string matrix = emit_matrix_file(report.code);
    if (!out_path.empty()) write_file(out_path, matrix);
    ordered_json j = json_of_construction(report);
    if (!report_path.empty()) write_file(report_path, j.dump(2) + "\n");
    if (json) {
        out << j.dump(2) << "\n";
    } else {
        print_human_construction(out, report);
        if (out_path.empty()) out << matrix;
    }
    return report.verified_minimal ? exit_ok : exit_verification;
}

int cmd_analyze(const std::string& path, std::optional<std::size_t> support_row,
                std::optional<std::size_t> witness_row, bool json, std::uint64_t max_enum,
                std::ostream& out) {
    LinearCode code = parse_matrix_file(read_file(path));
    WeightProfile profile = weight_profile(code, max_enum);
    MinimalityResult minimal = is_minimal_code(code, max_enum);
    PlessSecondMoment pless = pless_second_moment(code, max_enum);
    bool nondeg = is_nondegenerate(code);
    bool projective = is_projective(code);

    ordered_json j =
        json_of_analysis(code, profile, minimal, pless, nondeg, projective);

    if (support_row) {
        if (*support_row < 1 || *support_row > code.k())
            throw precondition_error("--support-poly row out of range [1, k]");
        std::vector<std::uint32_t> u(code.k(), 0);
        u[*support_row - 1] = 1;
        auto cw = code.encode(u);
        CanonicalForm cf = canonical_form(code, cw);
        auto nz = nonzero_set(cf.reduced_support, max_enum);
        ordered_json js;
        js["row"] = *support_row;
        js["support"] = support(cw);
        js["reduced"] = cf.reduced_support.to_string();
        js["canonical"] = cf.canonical.to_string();
        js["canonical_agrees"] = cf.agrees;
        js["nonzero_count"] = nz.size();
        j["results"]["support_poly"] = std::move(js);
    }
    if (witness_row) {
        if (*witness_row < 1 || *witness_row > code.k())
            throw precondition_error("--witnesses row out of range [1, k]");
        std::vector<std::uint32_t> u(code.k(), 0);
        u[*witness_row - 1] = 1;
        if (!is_maximal_codeword(code, u, max_enum))
            throw precondition_error("witness scan requires a maximal codeword; row " +
                                     std::to_string(*witness_row) + " is not maximal");
        auto witnesses = support_overlap_witnesses(code, u, max_enum);
        ordered_json jw = ordered_json::array();
        for (const auto& w : witnesses) {
            ordered_json e;
            e["j"] = w.j + 1; // 1-based in reports
            e["found"] = w.found;
            if (w.found) {
                e["codeword"] = w.codeword;
                ordered_json idx = ordered_json::array();
                for (auto i : w.overlap_set) idx.push_back(i + 1);
                e["overlap_set"] = std::move(idx);
                e["weight"] = w.weight;
            }
            jw.push_back(std::move(e));
        }
        j["results"]["overlap_witnesses"] = std::move(jw);
    }

    if (json) {
        out << j.dump(2) << "\n";
    } else {
        out << "[" << code.n() << ", " << code.k() << ", " << profile.d << "]_"
            << code.field()->q() << " code: " << (minimal.minimal ? "minimal" : "NOT minimal")
            << ", w_max " << profile.w_max << ", s " << profile.num_distinct_nonzero_weights
            << ", mean " << show(profile.mean) << ", variance " << show(profile.variance)
            << "\n";
        out << "nondegenerate " << (nondeg ? "yes" : "no") << ", projective "
            << (projective ? "yes" : "no") << ", second moment " << show(pless.lhs) << " = "
            << show(pless.rhs) << " (margin " << show(pless.margin) << ")\n";
        if (minimal.witness) {
            out << "witness: support of (";
            for (std::size_t i = 0; i < minimal.witness->inner.size(); ++i)
                out << (i ? " " : "") << minimal.witness->inner[i];
            out << ") sits strictly inside support of (";
            for (std::size_t i = 0; i < minimal.witness->outer.size(); ++i)
                out << (i ? " " : "") << minimal.witness->outer[i];
            out << ")\n";
        }
        if (support_row)
            out << "reduced support polynomial (row " << *support_row
                << "): " << j["results"]["support_poly"]["reduced"].get<std::string>() << "\n";
        if (witness_row) {
            for (const auto& e : j["results"]["overlap_witnesses"]) {
                out << "j = " << e["j"] << ": "
                    << (e["found"].get<bool>() ? "witness found" : "NO WITNESS") << "\n";
            }
        }
    }
    return exit_ok;
}

int cmd_bounds(const FeasibilityParams& params, bool json, std::ostream& out) {
    FeasibilityReport rep = feasibility(params);
    if (json) {
        out << json_of_feasibility(rep).dump(2) << "\n";
    } else {
        for (const auto& v : rep.verdicts) {
            out << v.name << ": value " << show(v.value) << ", "
                << (v.satisfied ? (*v.satisfied ? "satisfied" : "VIOLATED") : "n/a");
            if (!v.detail.empty()) out << " (" << v.detail << ")";
            out << "\n";
        }
        out << (rep.feasible ? "feasible so far" : "infeasible: " + rep.witness) << "\n";
    }
    return rep.feasible ? exit_ok : exit_infeasible;
}

int cmd_mtable(std::uint64_t q, std::size_t kmax, const std::string& csv_path, bool json,
               std::ostream& out) {
    auto rows = m_table(q, kmax);
    if (!csv_path.empty()) write_file(csv_path, csv_of_mtable(rows));
    if (json) {
        out << json_of_mtable(rows).dump(2) << "\n";
    } else {
        out << csv_of_mtable(rows);
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"minimal linear codes and cutting blocking sets toolkit"};
    app.require_subcommand(1);

    std::uint64_t max_enum = default_max_enum;
    unsigned threads = 0;
    app.add_option("--max-enum", max_enum,
                   "largest number of codeword classes any scan may enumerate");
    app.add_option("--threads", threads, "worker threads (0 = all cores)");

    // construct
    auto* c_construct = app.add_subcommand("construct", "build and verify a cutting blocking set");
    std::string name, out_path, report_path;
    std::uint64_t q = 0;
    std::size_t k = 0;
    bool json = false;
    c_construct->add_option("name", name, "construction name")->required();
    c_construct->add_option("--q", q, "field order")->required();
    c_construct->add_option("--k", k, "code dimension")->required();
    c_construct->add_option("--out", out_path, "write the generator matrix here");
    c_construct->add_option("--report", report_path, "write the JSON report here");
    c_construct->add_flag("--json", json, "print the JSON report on stdout");

    // analyze
    auto* c_analyze = app.add_subcommand("analyze", "analyze a generator matrix file");
    std::string matrix_path;
    std::optional<std::size_t> support_row, witness_row;
    c_analyze->add_option("file", matrix_path, "matrix file")->required();
    c_analyze->add_option("--support-poly", support_row,
                          "reduce the support polynomial of this generator row (1-based)")
        ->expected(0, 1)
        ->default_str("1");
    c_analyze->add_option("--witnesses", witness_row,
                          "overlap witnesses for this generator row (1-based)")
        ->expected(0, 1)
        ->default_str("1");
    c_analyze->add_flag("--json", json, "print the JSON report on stdout");

    // bounds
    auto* c_bounds = app.add_subcommand("bounds", "evaluate every applicable parameter bound");
    FeasibilityParams fp;
    std::optional<std::uint64_t> opt_n, opt_d, opt_w, opt_s;
    c_bounds->add_option("--q", fp.q, "field order")->required();
    c_bounds->add_option("--k", fp.k, "code dimension")->required();
    c_bounds->add_option("--n", opt_n, "length");
    c_bounds->add_option("--d", opt_d, "minimum distance");
    c_bounds->add_option("--w", opt_w, "maximum weight");
    c_bounds->add_option("--s", opt_s, "number of distinct nonzero weights");
    c_bounds->add_flag("--json", json, "print the JSON report on stdout");

    // mtable
    auto* c_mtable = app.add_subcommand("mtable", "best-known shortest-length table");
    std::uint64_t mq = 0;
    std::size_t kmax = 0;
    std::string csv_path;
    c_mtable->add_option("--q", mq, "field order")->required();
    c_mtable->add_option("--kmax", kmax, "largest dimension")->required();
    c_mtable->add_option("--csv", csv_path, "write CSV here");
    c_mtable->add_flag("--json", json, "print the JSON report on stdout");

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargs;
        cargs.push_back("mincode");
        for (const auto& a : argv) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << ex.what() << "\n";
        return exit_usage;
    }

    set_thread_count(threads);

    try {
        if (c_construct->parsed())
            return cmd_construct(name, q, k, out_path, report_path, json, max_enum, out);
        if (c_analyze->parsed()) {
            if (c_analyze->count("--support-poly") && !support_row) support_row = 1;
            if (c_analyze->count("--witnesses") && !witness_row) witness_row = 1;
            return cmd_analyze(matrix_path, support_row, witness_row, json, max_enum, out);
        }
        if (c_bounds->parsed()) {
            fp.n = opt_n;
            fp.d = opt_d;
            fp.w = opt_w;
            fp.s = opt_s;
            return cmd_bounds(fp, json, out);
        }
        if (c_mtable->parsed()) return cmd_mtable(mq, kmax, csv_path, json, out);
    } catch (const parse_error& ex) {
        err << "parse error: " << ex.what() << "\n";
        return exit_usage;
    } catch (const precondition_error& ex) {
        err << "error: " << ex.what() << "\n";
        return exit_usage;
    } catch (const limit_error& ex) {
        err << "limit: " << ex.what() << "\n";
        return exit_usage;
    } catch (const verification_error& ex) {
        err << "verification failure (library bug): " << ex.what() << "\n";
        return exit_verification;
    }
    err << "error: no subcommand\n";
    return exit_usage;
}

} // namespace mincode::cli
