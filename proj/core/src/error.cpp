#include "pompeiu/error.hpp"

namespace pompeiu {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::NotGelfandPair: return "NotGelfandPair";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::ImaginaryPartCap: return "ImaginaryPartCap";
    case ErrorKind::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorKind::OverlappingUnion: return "OverlappingUnion";
    case ErrorKind::NonRadial: return "NonRadial";
    case ErrorKind::LambdaZero: return "LambdaZero";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace pompeiu
