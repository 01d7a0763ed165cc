#pragma once

#include <stdexcept>
#include <string>

namespace qshell {

// Precondition violations (bad dimensions, mismatched ambients, out-of-range
// indices) are reported as std::invalid_argument. The types below cover the
// remaining failure classes the CLI maps onto distinct exit codes.

class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation requires a valid q-matroid (or independence
// family) and the input fails its axioms.
class AxiomViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qshell
