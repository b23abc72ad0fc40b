#pragma once
#include <stdexcept>
#include <string>

namespace wskg {

// Machine-readable failure categories surfaced by the library and the CLI.
enum class ErrorCode {
  InvalidArgument,          // bad user input (CLI usage, constructor preconditions)
  DomainError,              // evaluation outside a function's mathematical domain
  OverDeepPotential,        // negative radicand in the effective radial index
  NoBoundState,             // an existence condition excludes every state
  NoRealRoot,               // energy quadratic has complex roots
  DegenerateProblem,        // reduction's zero-discriminant condition holds identically
  NoValidBranch,            // no (k, sign) candidate satisfies the selection rules
  AmbiguousBranch,          // more than one candidate satisfies the selection rules
  NonNormalizable,          // wavefunction norm integral diverges at an endpoint
  NonDecayingAsymptotics,   // boundary exponent not real: no decaying solution
  IoError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::DomainError: return "domain-error";
    case ErrorCode::OverDeepPotential: return "over-deep-potential";
    case ErrorCode::NoBoundState: return "no-bound-state";
    case ErrorCode::NoRealRoot: return "no-real-root";
    case ErrorCode::DegenerateProblem: return "degenerate-problem";
    case ErrorCode::NoValidBranch: return "no-valid-branch";
    case ErrorCode::AmbiguousBranch: return "ambiguous-branch";
    case ErrorCode::NonNormalizable: return "non-normalizable";
    case ErrorCode::NonDecayingAsymptotics: return "non-decaying-asymptotics";
    case ErrorCode::IoError: return "io-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace wskg
