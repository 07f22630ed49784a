#pragma once

#include <stdexcept>
#include <string>

namespace rif {

enum class ErrorCode {
  WrongSetSize,
  ElementOutOfRange,
  DuplicateSet,
  EmptyFamily,
  ZeroMinDegree,
  InvalidS,
  WrongProbeSize,
  InvalidIndices,
  InvalidParameters,
  DimensionMismatch,
  LTooLarge,
  GroundSetExhausted,
  RatioMismatch,
  NotPrimePower,
  SizeCapExceeded,
  NoReplacementFound,
  ProfileInfeasible,
  RemovalNotPresent,
  PowerOfTwoK,
  KNotPowerOfTwo,
  LimitExceeded,
  ParseError,
  InvariantViolation,
};

const char* error_name(ErrorCode code);

// Domain error; what() is "<name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

} // namespace rif
