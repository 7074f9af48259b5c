#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgs {

enum class ErrorKind {
  RangeTooLarge,
  OrderTooLarge,
  UnsupportedShape,
  OutOfDomain,
  ParityViolation,
  RecursionDepth,
  PreconditionViolation,
  NonConvergence,
  NotRepresentable,
  Config,
  Io,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RangeTooLarge: return "range-too-large";
    case ErrorKind::OrderTooLarge: return "order-too-large";
    case ErrorKind::UnsupportedShape: return "unsupported-shape";
    case ErrorKind::OutOfDomain: return "out-of-domain";
    case ErrorKind::ParityViolation: return "parity-violation";
    case ErrorKind::RecursionDepth: return "recursion-depth";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::NotRepresentable: return "not-representable";
    case ErrorKind::Config: return "config";
    case ErrorKind::Io: return "io";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace qgs
