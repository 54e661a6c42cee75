#pragma once

#include <stdexcept>
#include <string>

namespace steinersurf {

enum class ErrorCode {
  NonUniform,
  DegenerateFacet,
  RedundantFacet,
  EmptyComplex,
  UnknownVertex,
  NotClosed,
  NotManifold,
  Disconnected,
  UnsupportedDimension,
  ApexCollision,
  DimensionMismatch,
  IdentificationCollision,
  TooFewVertices,
  PartialColoring,
  UnsupportedS,
  NotPure,
  NotStrongColoring,
  InvalidArgument,
  NotPrimitive,
  NotBijective,
  PairUncovered,
  PairDoubleCovered,
  BadOrder,
  DomainMismatch,
  NotASurface,
  NotTransversal,
  NotDisjoint,
  OddSOrientable,
  NotPrimeOrder,
  TripleNotOnCycle,
  NotAnSTS,
  IncompleteCycle,
  InvalidBaseColoring,
  MissingStructure,
  ParseError,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this type; code() is the
// machine-readable kind, what() carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& detail);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace steinersurf
