#include "symrank/error.hpp"

namespace symrank {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::ScalarNotInBase: return "ScalarNotInBase";
    case ErrorKind::DegenerateGenerator: return "DegenerateGenerator";
    case ErrorKind::NotRankOne: return "NotRankOne";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::ZeroAlpha: return "ZeroAlpha";
    case ErrorKind::ZeroEta: return "ZeroEta";
    case ErrorKind::SolutionNotInBase: return "SolutionNotInBase";
    case ErrorKind::UnsupportedQ: return "UnsupportedQ";
    case ErrorKind::BadDistance: return "BadDistance";
    case ErrorKind::OddDefect: return "OddDefect";
    case ErrorKind::BadCode: return "BadCode";
    case ErrorKind::SingularP: return "SingularP";
    case ErrorKind::InvalidCertificate: return "InvalidCertificate";
    case ErrorKind::ReproductionMismatch: return "ReproductionMismatch";
  }
  return "Unknown";
}

}  // namespace symrank
