#pragma once

#include <stdexcept>
#include <string>

namespace mincode {

// Violated user-facing precondition (bad parameters, unsupported range).
class precondition_error : public std::invalid_argument {
  public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration would exceed the configured limit. Callers may retry with a
// larger budget (CLI: --max-enum).
class limit_error : public std::runtime_error {
  public:
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; carries 1-based line/column of the offending token.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

// A re-verification step failed. If thrown, the library itself is at fault.
class verification_error : public std::logic_error {
  public:
    explicit verification_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace mincode
