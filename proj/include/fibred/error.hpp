#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibred {

enum class ErrorKind {
  NegativeInvariant,
  NoetherViolation,
  NotATree,
  GenusMismatch,
  AmbiguousFiber,
  IndexOutOfRange,
  InvalidFamily,
  IsotrivialFamily,
  MissingIrregularity,
  MissingRank,
  MissingFiberData,
  Delta0Mismatch,
  ParityViolation,
  InvalidDegree,
  DegenerateBase,
  NotHyperelliptic,
  Hyperelliptic,
  GenusTooSmall,
  HypothesisNotAsserted,
  LambdaOnHyperelliptic,
  InconsistentBranch,
  DomainViolation,
  EmptyRange,
  NeverPositive,
  Unsupported,
  OutOfRange,
  UnknownScenario,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NegativeInvariant: return "NegativeInvariant";
    case ErrorKind::NoetherViolation: return "NoetherViolation";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::GenusMismatch: return "GenusMismatch";
    case ErrorKind::AmbiguousFiber: return "AmbiguousFiber";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::IsotrivialFamily: return "IsotrivialFamily";
    case ErrorKind::MissingIrregularity: return "MissingIrregularity";
    case ErrorKind::MissingRank: return "MissingRank";
    case ErrorKind::MissingFiberData: return "MissingFiberData";
    case ErrorKind::Delta0Mismatch: return "Delta0Mismatch";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::DegenerateBase: return "DegenerateBase";
    case ErrorKind::NotHyperelliptic: return "NotHyperelliptic";
    case ErrorKind::Hyperelliptic: return "Hyperelliptic";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::HypothesisNotAsserted: return "HypothesisNotAsserted";
    case ErrorKind::LambdaOnHyperelliptic: return "LambdaOnHyperelliptic";
    case ErrorKind::InconsistentBranch: return "InconsistentBranch";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::NeverPositive: return "NeverPositive";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::UnknownScenario: return "UnknownScenario";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// All library failures carry a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fibred
