#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcx/net.hpp"
#include "qcx/qc_check.hpp"
#include "qcx/report.hpp"
#include "qcx/space.hpp"

namespace qcx {

// Flags: locally_convex, extremal, quasi_convex, locally_quasi_convex, and
// the theorem checks c3, prop42, lemma43, lemma44, prop22, c1vertex.
struct ExpectedFlag {
  std::string flag;
  Verdict verdict = Verdict::kNoViolation;
  std::string anchor;
};

struct ScenarioContext {
  const Space& space;
  const Net& ambient;
  double resolution;  // subset sampling step
  double radius;      // sampled extent of non-compact factors
};

struct ScenarioSpec {
  std::string name;
  std::string summary;
  std::string anchor;
  std::function<SpaceSpec()> space;
  std::function<SubsetNet(const ScenarioContext&)> subset;
  std::vector<ExpectedFlag> expected;
  // Theorem checks to run when the subset passes the quasi-convex test in a
  // curvature-1 space (c1vertex runs regardless of curvature).
  std::vector<std::string> theorems;
  std::optional<Point> vertex;  // for c1vertex
  double lqc_radius = 0.6;
  double pair_scale = std::numeric_limits<double>::quiet_NaN();
  double ambient_mult = 1.0;  // ambient step = resolution * ambient_mult
  double subset_mult = 1.0;
  double net_radius = 3.0;
  std::size_t cap = 40000;
  // Graph scenarios fix their own mesh and ignore the resolution.
  bool fixed_mesh = false;
  // Expectation set by the brute-force oracle rather than a stated result.
  bool unverified = false;
};

const std::vector<ScenarioSpec>& list_scenarios();
const ScenarioSpec& find_scenario(const std::string& name);

struct RunOptions {
  double resolution = 0.1;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct FlagResult {
  std::string flag;
  std::optional<Verdict> expected;
  Verdict observed = Verdict::kVacuous;
  double margin = 0.0;
  double tol = 0.0;
  bool match = true;
  std::string anchor;
};

struct ScenarioReport {
  std::string name;
  std::string space;
  std::string subset;
  std::size_t subset_size = 0;
  std::size_t ambient_size = 0;
  double subset_mesh = 0.0;
  double ambient_mesh = 0.0;
  RunOptions options;
  std::vector<CheckReport> checks;
  std::vector<FlagResult> flags;
  bool implications_hold = true;
  std::string implication_note;
  bool match = true;
  nlohmann::json document;
};

// An observed verdict satisfies an expected no-violation when it is
// no-violation or vacuous; an expected violation needs a violation.
bool verdict_matches(Verdict expected, Verdict observed);

// Space, ambient net and subset of a scenario at the given resolution.
struct ScenarioInstance {
  const ScenarioSpec* spec = nullptr;
  SpaceHandle space;
  Net ambient;
  SubsetNet subset;
};

ScenarioInstance build_scenario(const std::string& name, const RunOptions& opts);

ScenarioReport run_scenario(const std::string& name, const RunOptions& opts);

// Columns: scenario, flag, expected, observed, margin.
std::string summary_csv(const std::vector<ScenarioReport>& reports);

}  // namespace qcx
