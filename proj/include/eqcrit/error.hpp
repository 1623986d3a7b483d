#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqcrit {

enum class ErrorKind {
  Zero,                       // inverse/division of zero
  ZeroDivisor,                // nonunit in an etale (non-field) algebra
  ZeroPolynomial,             // monic(0), lc(0), ...
  FieldMismatch,
  DegreeMismatch,
  NotQuartic,
  ZeroScale,
  EllipticJ,
  JMismatch,
  NotDistinct,
  NoRationalFiberPoint,
  EllipticTargetObstruction,
  PoleAtT,
  ExcludedT,
  FieldTooSmall,
  NoPair,
  NotCoprime,
  NotPrime,
  DegenerateLeadingCoefficient,
  Precondition,
  VerificationFailed,
  Parse,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Zero: return "Zero";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotQuartic: return "NotQuartic";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::EllipticJ: return "EllipticJ";
    case ErrorKind::JMismatch: return "JMismatch";
    case ErrorKind::NotDistinct: return "NotDistinct";
    case ErrorKind::NoRationalFiberPoint: return "NoRationalFiberPoint";
    case ErrorKind::EllipticTargetObstruction: return "EllipticTargetObstruction";
    case ErrorKind::PoleAtT: return "PoleAtT";
    case ErrorKind::ExcludedT: return "ExcludedT";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::NoPair: return "NoPair";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// All library failures are reported through this type; `kind()` is the
/// machine-readable part, `what()` carries a human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eqcrit
