#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trispec {

enum class ErrorKind {
  AxiomViolation,
  SizeLimit,
  NotAHomomorphism,
  LocalIdentityMismatch,
  Axiom3Violation,
  TriassocViolation,
  OddOnly,
  NotAHom,
  NotPrimeInput,
  EmptySet,
  NotACover,
  Precondition,
  ParseError,
  SchemaError,
  RangeError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The witness is a short, finite
/// description of the offending elements that can be replayed through the
/// library calls (empty when there is nothing concrete to point at).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

/// Process exit status used by the CLI: 1 validation, 2 input, 3 size limit.
int exit_code(ErrorKind kind) noexcept;

}  // namespace trispec
