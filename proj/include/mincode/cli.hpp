#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mincode::cli {

/// Runs the command-line surface. Exit codes: 0 success (and feasible, for
/// `bounds`), 1 usage or precondition or enumeration-limit error, 2 internal
/// verification failure, 3 infeasible verdict.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mincode::cli
