#pragma once

#include <stdexcept>
#include <string>

namespace simcert {

enum class ErrorCode {
  DivisionByZero,
  NonCoprimeModuli,
  NotPrime,
  NotInvertibleInRing,
  NotPrimitive,
  ParameterNotInRing,
  DimensionMismatch,
  ScalarMatrix,
  TargetTraceMismatch,
  NoUnitOffDiagonal,
  IdealNotUnit,
  DimensionTooSmall,
  SearchExhausted,
  DecompositionSearchExhausted,
  IntegralityViolation,
  MinpolyDegreeNotTwo,
  ConstraintUnsatisfiable,
  InvalidArgument,
  Parse,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace simcert
