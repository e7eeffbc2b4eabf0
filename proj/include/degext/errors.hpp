#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degext {

enum class ErrorKind {
  InvalidInput,
  DimensionMismatch,
  DegenerateDisc,
  NonTransverseLine,
  SingularMap,
  ZeroOnBoundary,
  ZeroOnSliceBoundary,
  SliceBoundaryZero,
  NoConvergence,
  IrregularZero,
  SuspectMissedZeros,
  NoValidB,
  TCapExceeded,
  OracleDisagreement,
  DataExtends,
  IsComplexLinear,
};

std::string_view to_string(ErrorKind kind);

/// Process exit code for an error kind: 1 mathematical negative verdict,
/// 2 usage/input error, 3 numerical failure.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace degext
