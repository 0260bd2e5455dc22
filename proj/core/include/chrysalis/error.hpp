#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chrysalis {

enum class ErrorCode {
  DegenerateInput,
  DegenerateCircle,
  NotACircle,
  NotAPencil,
  BranchDomain,
  InfiniteRadius,
  NumericalDomain,
  IndexOutOfRange,
  SingularMetric,
  DimensionMismatch,
  DivisionByZero,
  NotPrime,
  DegenerateResidue,
  NotSymmetric,
  ConvergenceFailure,
  InfeasiblePoint,
  TooLarge,
  RankDeficient,
  TamperDetected,
  VersionMismatch,
  ProtocolViolation,
  FrameCorrupt,
  AuthFailed,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace chrysalis
