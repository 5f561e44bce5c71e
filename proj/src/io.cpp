#include "mincode/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace mincode {

namespace {

// Strict line scanner: single spaces between tokens, no leading or
// trailing blanks, so emitted files are canonical byte-for-byte.
std::vector<std::uint64_t> parse_int_line(const std::string& line, std::size_t lineno,
                                          std::size_t expected) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        if (line[pos] == ' ')
            throw parse_error("unexpected blank", lineno, pos + 1);
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ') ++pos;
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + pos, value);
        if (ec != std::errc() || ptr != line.data() + pos)
            throw parse_error("expected an unsigned integer", lineno, start + 1);
        out.push_back(value);
        if (pos < line.size()) ++pos; // skip exactly one space
        if (pos == line.size() && line.back() == ' ')
            throw parse_error("trailing whitespace", lineno, line.size());
    }
    if (expected != 0 && out.size() != expected)
        throw parse_error("expected " + std::to_string(expected) + " values, got " +
                              std::to_string(out.size()),
                          lineno, 1);
    return out;
}

} // namespace

LinearCode parse_matrix_file(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw parse_error("empty matrix file", 1, 1);
    auto header = parse_int_line(line, 1, 5);
    const std::uint64_t p = header[0];
    const std::uint64_t e = header[1];
    const std::uint64_t modulus = header[2];
    const std::uint64_t k = header[3];
    const std::uint64_t n = header[4];
    if (e == 0) throw parse_error("extension degree must be >= 1", 1, 1);
    if (k == 0 || n == 0) throw parse_error("k and n must be >= 1", 1, 1);

    FieldPtr field;
    try {
        field = Field::with_modulus(p, static_cast<std::uint32_t>(e), modulus);
    } catch (const precondition_error& ex) {
        throw parse_error(ex.what(), 1, 1);
    }

    Matrix g(field, k, n);
    for (std::uint64_t r = 0; r < k; ++r) {
        if (!std::getline(is, line))
            throw parse_error("expected " + std::to_string(k) + " matrix rows", r + 1, 1);
        auto row = parse_int_line(line, r + 2, n);
        for (std::uint64_t c = 0; c < n; ++c) {
            if (row[c] >= field->q())
                throw parse_error("element encoding " + std::to_string(row[c]) +
                                      " out of range for GF(" + std::to_string(field->q()) + ")",
                                  r + 2, c + 1);
            g.set(r, c, static_cast<std::uint32_t>(row[c]));
        }
    }
    std::string rest;
    while (std::getline(is, rest))
        if (!rest.empty()) throw parse_error("unexpected content after matrix body",
                                              k + 2, 1);
    try {
        return LinearCode(field, std::move(g));
    } catch (const precondition_error& ex) {
        throw parse_error(ex.what(), 2, 1);
    }
}

std::string emit_matrix_file(const LinearCode& code) {
    const Field& f = *code.field();
    std::ostringstream os;
    os << f.p() << " " << f.e() << " " << (f.e() == 1 ? 0 : f.modulus()) << " " << code.k() << " "
       << code.n() << "\n";
    for (std::size_t r = 0; r < code.k(); ++r) {
        for (std::size_t c = 0; c < code.n(); ++c) {
            if (c) os << " ";
            os << code.generator().at(r, c);
        }
        os << "\n";
    }
    return os.str();
}

ordered_json json_of_bigint(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

ordered_json json_of_rational(const Rational& v) {
    ordered_json j;
    j["num"] = json_of_bigint(boost::multiprecision::numerator(v));
    j["den"] = json_of_bigint(boost::multiprecision::denominator(v));
    return j;
}

ordered_json report_envelope(const std::string& kind, ordered_json params, ordered_json results,
                             std::vector<std::string> citations) {
    ordered_json j;
    j["schema_version"] = "1";
    j["kind"] = kind;
    j["params"] = std::move(params);
    j["results"] = std::move(results);
    j["citations"] = std::move(citations);
    return j;
}

ordered_json json_of_construction(const ConstructionReport& report) {
    ordered_json params;
    params["name"] = report.name;
    params["q"] = report.q;
    params["k"] = report.k;

    ordered_json results;
    results["n"] = report.pointset.size();
    results["k"] = report.k;
    results["expected_n"] = json_of_bigint(report.expected_n);
    if (report.expected_d) {
        results["expected_d"] = json_of_bigint(report.expected_d->value);
        results["expected_d_exact"] = report.expected_d->exact;
    }
    results["verified_minimal"] = report.verified_minimal;
    results["verified_d"] = report.verified_d;

    std::vector<std::string> citations{"re-verified: cutting test over all hyperplanes",
                                       "re-verified: exact weight enumeration"};
    return report_envelope("construction", std::move(params), std::move(results),
                           std::move(citations));
}

namespace {

const char* kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::lower_n: return "lower_n";
        case BoundKind::upper_n: return "upper_n";
        case BoundKind::lower_d: return "lower_d";
        case BoundKind::upper_d: return "upper_d";
        case BoundKind::constraint: return "constraint";
    }
    return "constraint";
}

ordered_json json_of_verdict(const BoundVerdict& v) {
    ordered_json j;
    j["name"] = v.name;
    j["kind"] = kind_name(v.kind);
    if (boost::multiprecision::denominator(v.value) == 1)
        j["value"] = json_of_bigint(boost::multiprecision::numerator(v.value));
    else
        j["value"] = json_of_rational(v.value);
    if (v.satisfied)
        j["satisfied"] = *v.satisfied;
    else
        j["satisfied"] = "n/a";
    j["citation"] = v.citation;
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

} // namespace

ordered_json json_of_feasibility(const FeasibilityReport& report) {
    ordered_json params;
    params["q"] = report.params.q;
    params["k"] = report.params.k;
    if (report.params.n) params["n"] = *report.params.n;
    if (report.params.d) params["d"] = *report.params.d;
    if (report.params.w) params["w"] = *report.params.w;
    if (report.params.s) params["s"] = *report.params.s;

    ordered_json results;
    ordered_json verdicts = ordered_json::array();
    std::vector<std::string> citations;
    for (const auto& v : report.verdicts) {
        verdicts.push_back(json_of_verdict(v));
        if (std::find(citations.begin(), citations.end(), v.citation) == citations.end())
            citations.push_back(v.citation);
    }
    results["verdicts"] = std::move(verdicts);
    ordered_json overall;
    overall["feasible"] = report.feasible;
    if (!report.feasible) overall["witness"] = report.witness;
    results["overall"] = std::move(overall);
    return report_envelope("feasibility", std::move(params), std::move(results),
                           std::move(citations));
}

ordered_json json_of_mtable(const std::vector<MTableEntry>& rows) {
    ordered_json params;
    if (!rows.empty()) {
        params["q"] = rows.front().q;
        params["kmax"] = rows.back().k;
    }
    ordered_json results;
    ordered_json jrows = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j;
        j["k"] = r.k;
        j["lower"] = json_of_bigint(r.lower);
        j["lower_source"] = r.lower_source;
        j["upper"] = json_of_bigint(r.upper);
        j["upper_source"] = r.upper_source;
        if (r.exact) j["exact"] = json_of_bigint(*r.exact);
        if (r.literature) {
            j["literature"] = json_of_bigint(*r.literature);
            j["literature_source"] = r.literature_source;
        }
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", r.nonconstructive_ref);
        j["nonconstructive_ref"] = std::string(buf);
        jrows.push_back(std::move(j));
    }
    results["rows"] = std::move(jrows);
    std::vector<std::string> citations{
        "lower bounds: closed-form length bounds plus the quadratic constraint",
        "upper bounds: explicit constructions, products, and lifts",
        "nonconstructive_ref: informational only, never part of a verdict"};
    return report_envelope("mtable", std::move(params), std::move(results), std::move(citations));
}

std::string csv_of_mtable(const std::vector<MTableEntry>& rows) {
    std::ostringstream os;
    os << "q,k,lower,lower_source,upper,upper_source,exact,literature,literature_source,"
          "nonconstructive_ref\n";
    for (const auto& r : rows) {
        os << r.q << "," << r.k << "," << r.lower.str() << "," << r.lower_source << ","
           << r.upper.str() << "," << r.upper_source << ",";
        if (r.exact) os << r.exact->str();
        os << ",";
        if (r.literature) os << r.literature->str();
        os << ",";
        os << r.literature_source << ",";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", r.nonconstructive_ref);
        os << buf << "\n";
    }
    return os.str();
}

} // namespace mincode
