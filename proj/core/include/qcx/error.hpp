#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcx {

enum class ErrorCode {
  kDegenerateTriangle,
  kInvalidSides,
  kInvalidAngle,
  kInvalidSpec,
  kForeignPoint,
  kAmbiguousGeodesic,
  kBudgetExceeded,
  kRadiusTooSmall,
  kNotInSubset,
  kWrongCurvature,
  kHypothesisFailed,
  kWrongConstructor,
  kUnsupportedVertex,
  kUnknownScenario,
  kUsage,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qcx
