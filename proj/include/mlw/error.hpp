#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mlw {

enum class ErrorKind {
  Domain,
  Pole,
  Overflow,
  NonConvergence,
  Divergence,
  ImaginaryResidue,
  FormulaDiscrepancy,
  UnknownKey,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind lets callers (the CLI, the
/// validation engine) attribute a failure without parsing the message.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Pole: return "pole error";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::ImaginaryResidue: return "imaginary residue";
    case ErrorKind::FormulaDiscrepancy: return "formula discrepancy";
    case ErrorKind::UnknownKey: return "unknown key";
  }
  return "error";
}

namespace detail {

inline void require_finite(double v, const char* who) {
  if (!(v - v == 0.0)) throw MathError(ErrorKind::Domain, std::string(who) + ": non-finite argument");
}

}  // namespace detail
}  // namespace mlw
