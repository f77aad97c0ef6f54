#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringcode {

/// Runs one CLI invocation. args excludes the program name. Writes reports
/// to out and diagnostics to err. Exit codes: 0 success, 1 input error,
/// 2 verification mismatch (a structural verdict contradicted by the
/// enumeration oracle, or a reference-table run that is not a perfect
/// verdict-preserving bijection).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringcode
