#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropelim {

/// Every failure the library reports carries one of these kinds so that
/// callers (the CLI in particular) can map it onto an exit status.
enum class ErrorKind {
  RankMismatch,
  NotContained,
  ZeroVector,
  EmptyInput,
  DimensionMismatch,
  SpanMismatch,
  NotPure,
  EmptyVariety,
  InvariantViolation,
  ZeroDimensional,
  RankDrop,
  NonIntegralMultiplicity,
  GenericityFailure,
  NotNormalFanCone,
  DegenerateParametrization,
  OnSupport,
  NotBalanced,
  NonIntegralVolume,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SpanMismatch: return "SpanMismatch";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::EmptyVariety: return "EmptyVariety";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::ZeroDimensional: return "ZeroDimensional";
    case ErrorKind::RankDrop: return "RankDrop";
    case ErrorKind::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorKind::GenericityFailure: return "GenericityFailure";
    case ErrorKind::NotNormalFanCone: return "NotNormalFanCone";
    case ErrorKind::DegenerateParametrization: return "DegenerateParametrization";
    case ErrorKind::OnSupport: return "OnSupport";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::NonIntegralVolume: return "NonIntegralVolume";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace tropelim
