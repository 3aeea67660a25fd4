#include "cotv/error.hpp"

namespace cotv {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::EmptyPolyhedron: return "EmptyPolyhedron";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::IntersectionNotFace: return "IntersectionNotFace";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAFacet: return "NotAFacet";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::MarkedCone: return "MarkedCone";
    case ErrorCode::MissingStabilizer: return "MissingStabilizer";
    case ErrorCode::MarkedFan: return "MarkedFan";
    case ErrorCode::UnbalancedInput: return "UnbalancedInput";
    case ErrorCode::NotTwoPoints: return "NotTwoPoints";
    case ErrorCode::NonLinearOnCone: return "NonLinearOnCone";
    case ErrorCode::NotDescendable: return "NotDescendable";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::CodimMismatch: return "CodimMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace cotv
