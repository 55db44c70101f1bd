#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcx/space.hpp"

namespace qcx {

enum class Verdict { kNoViolation, kViolation, kVacuous };

std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

struct Witness {
  std::vector<std::pair<std::string, Point>> points;
  std::vector<std::pair<std::string, double>> values;
};

struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::kVacuous;
  double worst_margin = 0.0;
  std::optional<Witness> witness;
  std::vector<std::pair<std::string, std::uint64_t>> counts;
  // tol, resolution, seed and check-specific parameters, in insertion order.
  std::vector<std::pair<std::string, double>> params;
  // Auxiliary measured quantities (sub-margins, branch hits, ...).
  std::vector<std::pair<std::string, double>> extras;

  double param(const std::string& key) const;
  double extra(const std::string& key) const;
  std::uint64_t count(const std::string& key) const;
  double tol() const { return param("tol"); }
};

// Sets the verdict from worst_margin and tol, dropping the witness when the
// outcome is not a violation. `evaluated == 0` yields vacuous.
void finalize(CheckReport& r, std::uint64_t evaluated);

nlohmann::json report_to_json(const Space& space, const CheckReport& r);

}  // namespace qcx
