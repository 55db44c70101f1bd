#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "qcx/error.hpp"
#include "qcx/net.hpp"
#include "qcx/qc_check.hpp"
#include "qcx/spaceforms.hpp"
#include "qcx/subsets.hpp"
#include "qcx/zoo.hpp"

namespace qcx {
namespace {

constexpr double kPi = std::numbers::pi;

Net net_of(const Space& s, double res, std::uint64_t seed = 0, double radius = 3.0) {
  NetOptions o;
  o.resolution = res;
  o.seed = seed;
  o.radius = radius;
  o.cap = 40000;
  return build_net(s, o);
}

// Straight re-derivation of the worst angle margin from raw distances.
double brute_qc_margin(const Space& s, const SubsetNet& F, const Net& Q) {
  const double cutoff = 3.0 * std::max(F.net.mesh, Q.mesh);
  double worst = -std::numeric_limits<double>::infinity();
  for (const Point& q : Q.points) {
    double dmin = std::numeric_limits<double>::infinity();
    for (const Point& f : F.net.points) dmin = std::min(dmin, s.dist(q, f));
    if (dmin <= cutoff) continue;
    bool cut = false;
    for (std::size_t p = 0; p < F.size(); ++p) {
      if (s.dist(q, F[p]) <= dmin + 1e-9 && F.is_cut_end(p)) cut = true;
    }
    if (cut) continue;
    for (std::size_t p = 0; p < F.size(); ++p) {
      const double dqp = s.dist(q, F[p]);
      if (dqp > dmin + 1e-9) continue;
      for (std::size_t r = 0; r < F.size(); ++r) {
        if (r == p) continue;
        const double ang =
            comparison_angle_clamped(s.declared_k(), dqp, s.dist(F[p], F[r]), s.dist(q, F[r]));
        worst = std::max(worst, ang - kPi / 2 - F.net.mesh / dqp);
      }
    }
  }
  return worst;
}

TEST(QuasiConvex, AntipodalPairPasses) {
  const auto s = Space::build(SpaceSpec::sphere(2));
  const Net Q = net_of(*s, 0.2);
  const SubsetNet F = subset_poles(*s, Q.mesh);
  const CheckReport r = check_quasi_convex(*s, F, Q);
  EXPECT_EQ(r.verdict, Verdict::kNoViolation);
  EXPECT_LE(r.worst_margin, 0.0);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_GT(r.count("triples"), 0u);
}

TEST(QuasiConvex, HelixFailsWithConsistentWitness) {
  const ScenarioInstance in = build_scenario("helix-in-cylinder", {0.1, 0, 1});
  const CheckReport r = check_quasi_convex(*in.space, in.subset, in.ambient);
  ASSERT_EQ(r.verdict, Verdict::kViolation);
  EXPECT_GE(r.worst_margin, 0.1);
  ASSERT_TRUE(r.witness.has_value());
  const auto& w = *r.witness;
  auto pt = [&](const std::string& key) {
    for (const auto& [k, p] : w.points) {
      if (k == key) return p;
    }
    throw std::runtime_error("missing witness point " + key);
  };
  auto val = [&](const std::string& key) {
    for (const auto& [k, v] : w.values) {
      if (k == key) return v;
    }
    throw std::runtime_error("missing witness value " + key);
  };
  const Point q = pt("q"), p = pt("p"), rr = pt("r");
  EXPECT_EQ(val("dqp"), in.space->dist(q, p));
  EXPECT_EQ(val("dpr"), in.space->dist(p, rr));
  EXPECT_EQ(val("dqr"), in.space->dist(q, rr));
  EXPECT_EQ(val("angle"), comparison_angle_clamped(0.0, val("dqp"), val("dpr"), val("dqr")));
  EXPECT_NEAR(r.worst_margin, val("angle") - kPi / 2 - val("slack"), 1e-15);
}

TEST(QuasiConvex, MatchesBruteForce) {
  for (const char* name : {"helix-in-cylinder", "antipodal-pair-on-sphere", "equator-sphere"}) {
    const ScenarioInstance in = build_scenario(name, {0.2, 3, 1});
    const CheckReport r = check_quasi_convex(*in.space, in.subset, in.ambient);
    EXPECT_NEAR(r.worst_margin, brute_qc_margin(*in.space, in.subset, in.ambient), 1e-12)
        << name;
  }
}

TEST(QuasiConvex, SinglePointIsVacuous) {
  const auto s = Space::build(SpaceSpec::sphere(2));
  const Net Q = net_of(*s, 0.3);
  const SubsetNet F = subset_list(*s, {sphere_point({0, 0, 1})}, "one", Q.mesh);
  EXPECT_EQ(check_quasi_convex(*s, F, Q).verdict, Verdict::kVacuous);
  EXPECT_EQ(check_local_quasi_convex(*s, F, 0.5, Q).verdict, Verdict::kVacuous);
  EXPECT_EQ(check_locally_convex(*s, F).verdict, Verdict::kVacuous);
}

TEST(QuasiConvex, ThreadCountDoesNotChangeTheReport) {
  const ScenarioInstance in = build_scenario("helix-in-cylinder", {0.15, 2, 1});
  CheckOptions one, four;
  four.threads = 4;
  const auto a = report_to_json(*in.space, check_quasi_convex(*in.space, in.subset, in.ambient, one));
  const auto b = report_to_json(*in.space, check_quasi_convex(*in.space, in.subset, in.ambient, four));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(QuasiConvex, LocalMinimaAddNoViolationOnEquator) {
  const ScenarioInstance in = build_scenario("equator-sphere", {0.15, 0, 1});
  CheckOptions o;
  o.local_minima = true;
  const CheckReport r = check_quasi_convex(*in.space, in.subset, in.ambient, o);
  EXPECT_EQ(r.check, "qc-local-minima");
  EXPECT_NE(r.verdict, Verdict::kViolation);
}

TEST(LocalQuasiConvex, HelixPassesAtSmallRadius) {
  const ScenarioInstance in = build_scenario("helix-in-cylinder", {0.1, 0, 1});
  const CheckReport r = check_local_quasi_convex(*in.space, in.subset, 0.5, in.ambient);
  EXPECT_EQ(r.verdict, Verdict::kNoViolation);
  EXPECT_GT(r.count("centers"), 0u);
  EXPECT_GT(r.count("cut_queries"), 0u);
  EXPECT_EQ(in.subset.cut_ends.size(), 2u);
}

TEST(LocalQuasiConvex, BarrelRimFails) {
  const ScenarioInstance in = build_scenario("barrel-rim", {0.1, 0, 1});
  const CheckReport r =
      check_local_quasi_convex(*in.space, in.subset, in.spec->lqc_radius, in.ambient);
  EXPECT_EQ(r.verdict, Verdict::kViolation);
  EXPECT_TRUE(r.witness.has_value());
}

TEST(LocalQuasiConvex, RadiusMustExceedTwiceTheMesh) {
  const ScenarioInstance in = build_scenario("helix-in-cylinder", {0.1, 0, 1});
  try {
    check_local_quasi_convex(*in.space, in.subset, 1.5 * in.subset.net.mesh, in.ambient);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRadiusTooSmall);
  }
}

TEST(LocalQuasiConvex, IsolatedPointsAreVacuousCenters) {
  const auto s = Space::build(SpaceSpec::sphere(2));
  const Net Q = net_of(*s, 0.2);
  const SubsetNet F = subset_poles(*s, Q.mesh);
  const CheckReport r = check_local_quasi_convex(*s, F, 1.0, Q);
  EXPECT_EQ(r.verdict, Verdict::kVacuous);
  EXPECT_EQ(r.count("vacuous_centers"), 2u);
}

TEST(Extremal, SuspensionPolesFollowBaseDiameter) {
  const ScenarioInstance ok = build_scenario("poles-extremal-iff-pi", {0.1, 0, 1});
  EXPECT_NE(check_extremal(*ok.space, ok.subset, ok.ambient).verdict, Verdict::kViolation);
  const ScenarioInstance bad = build_scenario("poles-extremal-iff-3pi2", {0.1, 0, 1});
  const CheckReport r = check_extremal(*bad.space, bad.subset, bad.ambient);
  EXPECT_EQ(r.verdict, Verdict::kViolation);
  ASSERT_TRUE(r.witness.has_value());
}

TEST(Extremal, DiscBoundaryPasses) {
  const ScenarioInstance in = build_scenario("disc-boundary-extremal", {0.1, 0, 1});
  const CheckReport r = check_extremal(*in.space, in.subset, in.ambient);
  EXPECT_NE(r.verdict, Verdict::kViolation);
  EXPECT_GT(r.count("probes"), 0u);
}

TEST(LocallyConvex, GeodesicsPassAndLongitudePairFails) {
  const auto sph = Space::build(SpaceSpec::sphere(2));
  EXPECT_EQ(check_locally_convex(*sph, subset_equator(*sph, 0.05)).verdict,
            Verdict::kNoViolation);
  const ScenarioInstance helix = build_scenario("helix-in-cylinder", {0.1, 0, 1});
  EXPECT_EQ(check_locally_convex(*helix.space, helix.subset).verdict, Verdict::kNoViolation);

  // Two points far apart on the equator, away from each other's pair scale.
  const SubsetNet sparse = subset_list(*sph, {sphere_point({1, 0, 0}), sphere_point({0, 1, 0})},
                                       "pair", 0.05);
  CheckOptions o;
  o.pair_scale = 2.0;
  const CheckReport r = check_locally_convex(*sph, sparse, o);
  EXPECT_EQ(r.verdict, Verdict::kViolation);
  EXPECT_NEAR(r.worst_margin, kPi / 4, 1e-12);
}

TEST(LocallyConvex, AntipodalMidpointIsAmbiguous) {
  const auto sph = Space::build(SpaceSpec::sphere(2));
  const SubsetNet F = subset_poles(*sph, 0.1);
  CheckOptions o;
  o.pair_scale = 4.0;
  try {
    check_locally_convex(*sph, F, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAmbiguousGeodesic);
  }
}

TEST(Classify, ImplicationsOnHelixAndEquator) {
  const ScenarioInstance helix = build_scenario("helix-in-cylinder", {0.1, 0, 1});
  const Classification c = classify(*helix.space, helix.subset, helix.ambient, 0.5);
  EXPECT_EQ(c.locally_convex.verdict, Verdict::kNoViolation);
  EXPECT_EQ(c.quasi_convex.verdict, Verdict::kViolation);
  EXPECT_NE(c.extremal.verdict, Verdict::kNoViolation);
  EXPECT_TRUE(c.implications_hold);

  const ScenarioInstance eq = build_scenario("equator-sphere", {0.1, 0, 1});
  const Classification e = classify(*eq.space, eq.subset, eq.ambient, 0.6);
  EXPECT_EQ(e.locally_convex.verdict, Verdict::kNoViolation);
  EXPECT_EQ(e.quasi_convex.verdict, Verdict::kNoViolation);
  EXPECT_EQ(e.locally_quasi_convex.verdict, Verdict::kNoViolation);
  EXPECT_TRUE(e.implications_hold);
}

TEST(TrueAngle, MatchesSphericalOracle) {
  const auto sph = Space::build(SpaceSpec::sphere(2));
  const Point p = sphere_point({0, 0, 1});
  for (double phi : {0.3, 1.0, 2.0, 3.0}) {
    const Point q = sphere_point(oracle::polar(0.8, 0.0));
    const Point r = sphere_point(oracle::polar(1.1, phi));
    EXPECT_NEAR(true_angle(*sph, p, q, r), phi, 1e-4) << phi;
  }
}

}  // namespace
}  // namespace qcx
