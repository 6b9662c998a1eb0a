#include "trispec/error.hpp"

namespace trispec {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::LocalIdentityMismatch: return "LocalIdentityMismatch";
    case ErrorKind::Axiom3Violation: return "Axiom3Violation";
    case ErrorKind::TriassocViolation: return "TriassocViolation";
    case ErrorKind::OddOnly: return "OddOnly";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::NotPrimeInput: return "NotPrimeInput";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::RangeError: return "RangeError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::string witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::SchemaError:
    case ErrorKind::RangeError:
      return 2;
    case ErrorKind::SizeLimit:
      return 3;
    default:
      return 1;
  }
}

}  // namespace trispec
