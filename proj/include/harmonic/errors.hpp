#pragma once

#include <stdexcept>
#include <string>

namespace harmonic {

enum class Errc {
  NonPrimeCharacteristic,
  ReducibleModulus,
  MissingModulus,
  ZeroInverse,
  FieldMismatch,
  ZeroVector,
  EqualPoints,
  EqualLines,
  NotCollinear,
  DegeneratePoints,
  TooLarge,
  NonPrimeParameter,
  UnsupportedOrder,
  AmbientNotHarmonic,
  StageLimitExceeded,
  ClaimFailed,
  DegenerateStep,
  NotModular,
  SyntaxError,
  InvariantViolation,
  BadArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace harmonic
