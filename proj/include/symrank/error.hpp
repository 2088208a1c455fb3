#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace symrank {

enum class ErrorKind {
  NonPrimeCharacteristic,
  ReduciblePolynomial,
  MalformedSpec,
  CapExceeded,
  ParseError,
  ZeroArgument,
  ScalarNotInBase,
  DegenerateGenerator,
  NotRankOne,
  NotSymmetric,
  ZeroAlpha,
  ZeroEta,
  SolutionNotInBase,
  UnsupportedQ,
  BadDistance,
  OddDefect,
  BadCode,
  SingularP,
  InvalidCertificate,
  ReproductionMismatch,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `index()` carries the offending
/// position (matrix index, generator index) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace symrank
