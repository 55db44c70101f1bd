#include "qcx/error.hpp"

namespace qcx {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::kInvalidSides: return "InvalidSides";
    case ErrorCode::kInvalidAngle: return "InvalidAngle";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kForeignPoint: return "ForeignPoint";
    case ErrorCode::kAmbiguousGeodesic: return "AmbiguousGeodesic";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kRadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::kNotInSubset: return "NotInSubset";
    case ErrorCode::kWrongCurvature: return "WrongCurvature";
    case ErrorCode::kHypothesisFailed: return "HypothesisFailed";
    case ErrorCode::kWrongConstructor: return "WrongConstructor";
    case ErrorCode::kUnsupportedVertex: return "UnsupportedVertex";
    case ErrorCode::kUnknownScenario: return "UnknownScenario";
    case ErrorCode::kUsage: return "Usage";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code) {}

}  // namespace qcx
