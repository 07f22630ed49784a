#include "rif/error.hpp"

namespace rif {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::WrongSetSize: return "WrongSetSize";
    case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::DuplicateSet: return "DuplicateSet";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::ZeroMinDegree: return "ZeroMinDegree";
    case ErrorCode::InvalidS: return "InvalidS";
    case ErrorCode::WrongProbeSize: return "WrongProbeSize";
    case ErrorCode::InvalidIndices: return "InvalidIndices";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LTooLarge: return "LTooLarge";
    case ErrorCode::GroundSetExhausted: return "GroundSetExhausted";
    case ErrorCode::RatioMismatch: return "RatioMismatch";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NoReplacementFound: return "NoReplacementFound";
    case ErrorCode::ProfileInfeasible: return "ProfileInfeasible";
    case ErrorCode::RemovalNotPresent: return "RemovalNotPresent";
    case ErrorCode::PowerOfTwoK: return "PowerOfTwoK";
    case ErrorCode::KNotPowerOfTwo: return "KNotPowerOfTwo";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "UnknownError";
}

} // namespace rif
