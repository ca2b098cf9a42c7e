#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bihom {

enum class ErrorKind {
  DimensionMismatch,
  DivisionByZero,
  ParseError,
  ValidationError,
  SingularMap,
  NotAHomomorphism,
  MapsDoNotCommute,
  ZeroParameter,
  SymmetryConditionFails,
  OddAssociativeFactor,
  NotFixedPoint,
  IntertwiningFails,
  FailedPrecondition,
  CocycleFails,
  NoDualBasis,
  ParityObstruction,
  ReportedMismatch,
  OddMap,
  UnknownCommand,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception. `witness` carries the offending basis tuple when
/// the failure is attached to one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace bihom
