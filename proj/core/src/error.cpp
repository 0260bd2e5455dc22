#include "chrysalis/error.hpp"

namespace chrysalis {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::DegenerateCircle: return "DegenerateCircle";
    case ErrorCode::NotACircle: return "NotACircle";
    case ErrorCode::NotAPencil: return "NotAPencil";
    case ErrorCode::BranchDomain: return "BranchDomain";
    case ErrorCode::InfiniteRadius: return "InfiniteRadius";
    case ErrorCode::NumericalDomain: return "NumericalDomain";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SingularMetric: return "SingularMetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegenerateResidue: return "DegenerateResidue";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::InfeasiblePoint: return "InfeasiblePoint";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::TamperDetected: return "TamperDetected";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::ProtocolViolation: return "ProtocolViolation";
    case ErrorCode::FrameCorrupt: return "FrameCorrupt";
    case ErrorCode::AuthFailed: return "AuthFailed";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace chrysalis
