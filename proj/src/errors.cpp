#include "degext/errors.hpp"

namespace degext {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateDisc: return "DegenerateDisc";
    case ErrorKind::NonTransverseLine: return "NonTransverseLine";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::ZeroOnBoundary: return "ZeroOnBoundary";
    case ErrorKind::ZeroOnSliceBoundary: return "ZeroOnSliceBoundary";
    case ErrorKind::SliceBoundaryZero: return "SliceBoundaryZero";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::IrregularZero: return "IrregularZero";
    case ErrorKind::SuspectMissedZeros: return "SuspectMissedZeros";
    case ErrorKind::NoValidB: return "NoValidB";
    case ErrorKind::TCapExceeded: return "TCapExceeded";
    case ErrorKind::OracleDisagreement: return "OracleDisagreement";
    case ErrorKind::DataExtends: return "DataExtends";
    case ErrorKind::IsComplexLinear: return "IsComplexLinear";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DataExtends:
    case ErrorKind::IsComplexLinear:
      return 1;
    case ErrorKind::InvalidInput:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DegenerateDisc:
    case ErrorKind::NonTransverseLine:
    case ErrorKind::SingularMap:
      return 2;
    default:
      return 3;
  }
}

}  // namespace degext
