#pragma once

#include <stdexcept>
#include <string>

namespace pompeiu {

enum class ErrorKind {
  InvalidArgument,
  OrderCapExceeded,
  NotPermutation,
  SpaceMismatch,
  NotGelfandPair,
  EmptySet,
  SpaceTooLarge,
  UnsupportedDimension,
  ImaginaryPartCap,
  DegeneratePolytope,
  OverlappingUnion,
  NonRadial,
  LambdaZero,
  QuadratureNotConverged,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

/// All library failures are reported through this exception type; `kind()`
/// lets front ends map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pompeiu
