#pragma once

#include "mincode/bounds.hpp"
#include "mincode/constructions.hpp"
#include "mincode/supportpoly.hpp"

#include <json.hpp>

#include <string>

namespace mincode {

using ordered_json = nlohmann::ordered_json;

/// Generator matrix file. Header "p e modulus k n" (modulus in base-p
/// encoding, 0 permitted when e = 1), then k lines of n space-separated
/// element encodings. Single spaces, one trailing newline per line, no
/// other whitespace: parse and emit round-trip byte-identically.
LinearCode parse_matrix_file(const std::string& text);
std::string emit_matrix_file(const LinearCode& code);

/// JSON number when it fits into 64 bits, decimal string otherwise.
ordered_json json_of_bigint(const BigInt& v);
/// {"num": ..., "den": ...}
ordered_json json_of_rational(const Rational& v);

/// Fixed envelope {schema_version, kind, params, results, citations}.
ordered_json report_envelope(const std::string& kind, ordered_json params, ordered_json results,
                             std::vector<std::string> citations);

ordered_json json_of_construction(const ConstructionReport& report);
ordered_json json_of_feasibility(const FeasibilityReport& report);
ordered_json json_of_mtable(const std::vector<MTableEntry>& rows);

std::string csv_of_mtable(const std::vector<MTableEntry>& rows);

} // namespace mincode
