#include "qcx/report.hpp"

#include <cmath>

#include "qcx/error.hpp"
#include "qcx/space_json.hpp"

namespace qcx {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kNoViolation: return "no-violation";
    case Verdict::kViolation: return "violation";
    case Verdict::kVacuous: return "vacuous";
  }
  return "unknown";
}

Verdict verdict_from_name(const std::string& name) {
  if (name == "no-violation") return Verdict::kNoViolation;
  if (name == "violation") return Verdict::kViolation;
  if (name == "vacuous") return Verdict::kVacuous;
  throw Error(ErrorCode::kInvalidSpec, "unknown verdict '" + name + "'");
}

namespace {

template <typename V>
const V* find(const std::vector<std::pair<std::string, V>>& list, const std::string& key) {
  for (const auto& [k, v] : list) {
    if (k == key) return &v;
  }
  return nullptr;
}

nlohmann::json number(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
}

}  // namespace

double CheckReport::param(const std::string& key) const {
  const double* v = find(params, key);
  return v ? *v : std::nan("");
}

double CheckReport::extra(const std::string& key) const {
  const double* v = find(extras, key);
  return v ? *v : std::nan("");
}

std::uint64_t CheckReport::count(const std::string& key) const {
  const std::uint64_t* v = find(counts, key);
  return v ? *v : 0;
}

void finalize(CheckReport& r, std::uint64_t evaluated) {
  if (evaluated == 0) {
    r.verdict = Verdict::kVacuous;
    r.worst_margin = 0.0;
    r.witness.reset();
    return;
  }
  r.verdict = r.worst_margin > r.tol() ? Verdict::kViolation : Verdict::kNoViolation;
  if (r.verdict != Verdict::kViolation) r.witness.reset();
}

nlohmann::json report_to_json(const Space& space, const CheckReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["verdict"] = verdict_name(r.verdict);
  j["worst_margin"] = number(r.worst_margin);
  if (r.witness) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [k, p] : r.witness->points) w[k] = point_to_json(space, p);
    for (const auto& [k, v] : r.witness->values) w[k] = number(v);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  j["counts"] = std::move(counts);
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = number(v);
  j["params"] = std::move(params);
  if (!r.extras.empty()) {
    nlohmann::json extras = nlohmann::json::object();
    for (const auto& [k, v] : r.extras) extras[k] = number(v);
    j["extras"] = std::move(extras);
  }
  return j;
}

}  // namespace qcx
