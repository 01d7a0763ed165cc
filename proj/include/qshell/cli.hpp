#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qshell::cli {

inline constexpr const char* kVersion = "qshell 1.0.0";

// Stable exit codes.
enum Exit : int {
  kOk = 0,
  kMismatch = 1,        // a computed result disagrees with the expected one
  kCapExceeded = 2,     // enumeration refused by the subspace cap
  kAxiomViolation = 3,  // invalid q-matroid input or failed axiom suite
  kParseFailure = 4,    // unreadable input file
  kUsage = 64,
};

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qshell::cli
