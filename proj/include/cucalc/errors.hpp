#pragma once

#include <stdexcept>
#include <string>

namespace cucalc {

// Exit-code contract for the CLI: 0 ok, 1 verification failure,
// 2 parse error, 3 domain error.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

// Non-ascending input handed to a supremum, invalid element data, and similar
// caller mistakes. Reported through the same exit code as DomainError.
struct PreconditionError : DomainError {
  explicit PreconditionError(const std::string& m) : DomainError(m) {}
};

// Supremum requested for an infinite family with no registered closed form.
struct UnsupportedChainError : DomainError {
  explicit UnsupportedChainError(const std::string& m) : DomainError(m) {}
};

// An action handed to make_semimodule failed its construction-time spot checks.
struct InvalidActionError : DomainError {
  explicit InvalidActionError(const std::string& m) : DomainError(m) {}
};

}  // namespace cucalc
