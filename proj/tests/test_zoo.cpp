#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "qcx/error.hpp"
#include "qcx/qc_check.hpp"
#include "qcx/spaceforms.hpp"
#include "qcx/zoo.hpp"

namespace qcx {
namespace {

constexpr double kPi = std::numbers::pi;

const FlagResult* flag(const ScenarioReport& r, const std::string& name) {
  for (const FlagResult& f : r.flags) {
    if (f.flag == name) return &f;
  }
  return nullptr;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const ScenarioSpec& s : list_scenarios()) out.push_back(s.name);
  return out;
}

TEST(Catalog, CoversTheRequiredExamples) {
  const auto& cat = list_scenarios();
  EXPECT_GE(cat.size(), 12u);
  const std::vector<std::string> have = names();
  for (const char* n :
       {"helix-in-cylinder", "antipodal-pair-on-sphere", "isolated-points-non-qc", "barrel-rim",
        "capped-cylinder-rim", "cone-over-pair", "join-factor", "join-product-failure",
        "antipodal-longitudes", "poles-extremal-iff-pi", "poles-extremal-iff-3pi2",
        "rotation-fixed-set", "disc-boundary-extremal"}) {
    EXPECT_NE(std::find(have.begin(), have.end(), n), have.end()) << n;
  }
  std::set<std::string> unique(have.begin(), have.end());
  EXPECT_EQ(unique.size(), have.size());
}

TEST(Catalog, EveryFlagHasAnAnchor) {
  for (const ScenarioSpec& s : list_scenarios()) {
    EXPECT_FALSE(s.expected.empty()) << s.name;
    EXPECT_FALSE(s.anchor.empty()) << s.name;
    for (const ExpectedFlag& e : s.expected) EXPECT_FALSE(e.anchor.empty()) << s.name << " " << e.flag;
  }
}

TEST(Catalog, JoinProductExpectsFailure) {
  const ScenarioSpec& s = find_scenario("join-product-failure");
  ASSERT_EQ(s.expected.size(), 1u);
  EXPECT_EQ(s.expected[0].flag, "quasi_convex");
  EXPECT_EQ(s.expected[0].verdict, Verdict::kViolation);
}

TEST(Catalog, UnknownName) {
  try {
    find_scenario("no-such-thing");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownScenario);
  }
  try {
    run_scenario("no-such-thing", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownScenario);
  }
}

TEST(RunScenario, Examples) {
  const ScenarioReport pair = run_scenario("antipodal-pair-on-sphere", {0.1, 7, 1});
  EXPECT_TRUE(pair.match);
  const ScenarioReport helix = run_scenario("helix-in-cylinder", {0.05, 7, 1});
  EXPECT_TRUE(helix.match);
  ASSERT_NE(flag(helix, "quasi_convex"), nullptr);
  EXPECT_EQ(flag(helix, "quasi_convex")->observed, Verdict::kViolation);
  EXPECT_EQ(flag(helix, "locally_convex")->observed, Verdict::kNoViolation);
  const ScenarioReport poles = run_scenario("poles-extremal-iff-3pi2", {0.1, 7, 1});
  EXPECT_TRUE(poles.match);
  EXPECT_EQ(flag(poles, "extremal")->observed, Verdict::kViolation);
}

TEST(RunScenario, VerdictMatching) {
  EXPECT_TRUE(verdict_matches(Verdict::kNoViolation, Verdict::kVacuous));
  EXPECT_TRUE(verdict_matches(Verdict::kViolation, Verdict::kViolation));
  EXPECT_FALSE(verdict_matches(Verdict::kViolation, Verdict::kVacuous));
  EXPECT_FALSE(verdict_matches(Verdict::kNoViolation, Verdict::kViolation));
}

TEST(RunScenario, ThreadCountLeavesDocumentUnchanged) {
  for (const char* n : {"antipodal-longitudes", "barrel-rim"}) {
    const auto a = run_scenario(n, {0.1, 0, 1}).document.dump();
    const auto b = run_scenario(n, {0.1, 0, 3}).document.dump();
    EXPECT_EQ(a, b) << n;
  }
}

TEST(RunScenario, SummaryCsvColumns) {
  const ScenarioReport r = run_scenario("antipodal-pair-on-sphere", {0.15, 0, 1});
  const std::string csv = summary_csv({r});
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "scenario,flag,expected,observed,margin");
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), 1 + r.flags.size());
}

class EveryScenario : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryScenario, VerdictsIndependentOfSeed) {
  std::vector<std::vector<Verdict>> seen;
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const ScenarioReport r = run_scenario(GetParam(), {0.1, seed, 1});
    std::vector<Verdict> v;
    for (const FlagResult& f : r.flags) v.push_back(f.observed);
    seen.push_back(v);
  }
  EXPECT_EQ(seen[0], seen[1]);
  EXPECT_EQ(seen[0], seen[2]);
}

INSTANTIATE_TEST_SUITE_P(Zoo, EveryScenario, ::testing::ValuesIn(names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           std::replace(s.begin(), s.end(), '-', '_');
                           return s;
                         });

TEST(Resolution, VerdictsStableUnderHalving) {
  for (const char* n : {"antipodal-pair-on-sphere", "poles-extremal-iff-pi",
                        "poles-extremal-iff-3pi2", "antipodal-longitudes", "equator-sphere"}) {
    const ScenarioReport a = run_scenario(n, {0.1, 0, 1});
    const ScenarioReport b = run_scenario(n, {0.05, 0, 1});
    ASSERT_EQ(a.flags.size(), b.flags.size()) << n;
    for (std::size_t i = 0; i < a.flags.size(); ++i) {
      EXPECT_EQ(a.flags[i].observed, b.flags[i].observed) << n << " " << a.flags[i].flag;
    }
  }
}

// Angles measured along geodesics give the same verdict as comparison
// angles on the spherical scenarios.
TEST(TrueAngles, AgreeWithComparisonAngles) {
  for (const char* n : {"antipodal-pair-on-sphere", "equator-sphere", "antipodal-longitudes",
                        "rotation-fixed-set", "half-equator-arc"}) {
    const ScenarioInstance in = build_scenario(n, {0.15, 0, 1});
    CheckOptions cmp, tru;
    tru.true_angles = true;
    const CheckReport a = check_quasi_convex(*in.space, in.subset, in.ambient, cmp);
    const CheckReport b = check_quasi_convex(*in.space, in.subset, in.ambient, tru);
    EXPECT_EQ(b.check, "qc-true-angle");
    EXPECT_EQ(a.verdict, b.verdict) << n << " " << a.worst_margin << " " << b.worst_margin;
  }
}

// Net-local minima of the distance function raise no violation that the
// global feet did not.
TEST(LocalMinima, NoNewViolationsOnQuasiConvexScenarios) {
  for (const char* n : {"antipodal-pair-on-sphere", "equator-sphere", "antipodal-longitudes",
                        "join-factor", "rotation-fixed-set"}) {
    const ScenarioInstance in = build_scenario(n, {0.15, 0, 1});
    CheckOptions lm;
    lm.local_minima = true;
    const CheckReport g = check_quasi_convex(*in.space, in.subset, in.ambient);
    ASSERT_NE(g.verdict, Verdict::kViolation) << n;
    EXPECT_NE(check_quasi_convex(*in.space, in.subset, in.ambient, lm).verdict,
              Verdict::kViolation)
        << n;
  }
}

// Exhaustive oracle for the half-equator expectation: a query on the equator
// just past an endpoint has that endpoint as its foot and sees the rest of
// the arc at angle pi.
TEST(HalfEquator, EndpointOracle) {
  const ScenarioInstance in = build_scenario("half-equator-arc", {0.1, 0, 1});
  const Space& s = *in.space;
  const Point q = sphere_point({std::cos(-0.4), std::sin(-0.4), 0.0});
  std::size_t foot = 0;
  double best = 1e300;
  for (std::size_t i = 0; i < in.subset.size(); ++i) {
    const double d = s.dist(q, in.subset[i]);
    if (d < best) {
      best = d;
      foot = i;
    }
  }
  EXPECT_NEAR(in.subset[foot].v[0], 1.0, 1e-15);
  double worst = 0.0;
  for (std::size_t r = 0; r < in.subset.size(); ++r) {
    if (r == foot || s.dist(in.subset[foot], in.subset[r]) > 0.5) continue;
    worst = std::max(worst, comparison_angle_clamped(1.0, best, s.dist(in.subset[foot], in.subset[r]),
                                                     s.dist(q, in.subset[r])));
  }
  EXPECT_GT(worst, kPi - 1e-6);
  const ScenarioReport rep = run_scenario("half-equator-arc", {0.1, 0, 1});
  EXPECT_EQ(flag(rep, "locally_quasi_convex")->observed, Verdict::kViolation);
  EXPECT_TRUE(rep.match);
}

}  // namespace
}  // namespace qcx
