#ifndef NEWTONCYCLES_ERRORS_HPP
#define NEWTONCYCLES_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace newtoncycles {

enum class ErrorKind {
  InvalidArgument,
  PoleError,
  FixedRoot,
  NonSquare,
  DistinctnessError,
  NoSolution,
  ConstantSolution,
  NotACycle,
  BracketFailure,
  OrderingViolation,
  RankMismatch,
  ConvergenceFailure,
  IoError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PoleError: return "PoleError";
    case ErrorKind::FixedRoot: return "FixedRoot";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::DistinctnessError: return "DistinctnessError";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::ConstantSolution: return "ConstantSolution";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::OrderingViolation: return "OrderingViolation";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (and the
/// CLI's exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace newtoncycles

#endif  // NEWTONCYCLES_ERRORS_HPP
