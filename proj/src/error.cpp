#include "steinersurf/error.hpp"

namespace steinersurf {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUniform: return "NonUniform";
    case ErrorCode::DegenerateFacet: return "DegenerateFacet";
    case ErrorCode::RedundantFacet: return "RedundantFacet";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotManifold: return "NotManifold";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::ApexCollision: return "ApexCollision";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IdentificationCollision: return "IdentificationCollision";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::PartialColoring: return "PartialColoring";
    case ErrorCode::UnsupportedS: return "UnsupportedS";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotStrongColoring: return "NotStrongColoring";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::PairUncovered: return "PairUncovered";
    case ErrorCode::PairDoubleCovered: return "PairDoubleCovered";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotASurface: return "NotASurface";
    case ErrorCode::NotTransversal: return "NotTransversal";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::OddSOrientable: return "OddSOrientable";
    case ErrorCode::NotPrimeOrder: return "NotPrimeOrder";
    case ErrorCode::TripleNotOnCycle: return "TripleNotOnCycle";
    case ErrorCode::NotAnSTS: return "NotAnSTS";
    case ErrorCode::IncompleteCycle: return "IncompleteCycle";
    case ErrorCode::InvalidBaseColoring: return "InvalidBaseColoring";
    case ErrorCode::MissingStructure: return "MissingStructure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

ParseError::ParseError(int line, int column, const std::string& detail)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail),
      line_(line),
      column_(column) {}

}  // namespace steinersurf
