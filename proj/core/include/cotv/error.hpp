#pragma once

#include <stdexcept>
#include <string>

namespace cotv {

enum class ErrorCode {
  ZeroVector,
  EmptyPolyhedron,
  NotPointed,
  RankMismatch,
  IntersectionNotFace,
  DimensionMismatch,
  NotAFacet,
  NotAFace,
  MarkedCone,
  MissingStabilizer,
  MarkedFan,
  UnbalancedInput,
  NotTwoPoints,
  NonLinearOnCone,
  NotDescendable,
  OutOfRange,
  CodimMismatch,
  DomainMismatch,
  InvalidInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cotv
