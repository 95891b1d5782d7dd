#include "harmonic/errors.hpp"

namespace harmonic {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::MissingModulus: return "MissingModulus";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::EqualPoints: return "EqualPoints";
    case Errc::EqualLines: return "EqualLines";
    case Errc::NotCollinear: return "NotCollinear";
    case Errc::DegeneratePoints: return "DegeneratePoints";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NonPrimeParameter: return "NonPrimeParameter";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::AmbientNotHarmonic: return "AmbientNotHarmonic";
    case Errc::StageLimitExceeded: return "StageLimitExceeded";
    case Errc::ClaimFailed: return "ClaimFailed";
    case Errc::DegenerateStep: return "DegenerateStep";
    case Errc::NotModular: return "NotModular";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace harmonic
