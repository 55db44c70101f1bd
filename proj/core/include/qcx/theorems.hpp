#pragma once

#include <limits>

#include "qcx/net.hpp"
#include "qcx/qc_check.hpp"
#include "qcx/report.hpp"
#include "qcx/space.hpp"

namespace qcx {

// Shared knobs for the curvature-1 theorem checks. NaN tolerances select
// 2 * mesh(F). The rigidity band defaults to tol / 4, except for the
// lemma43 sum whose deficit is quadratic in the distance to the antipodal
// branch; there it defaults to tol^3 / 16, which keeps both branch
// distances at most tol / 2 in the continuum.
struct TheoremOptions {
  double tol = std::numeric_limits<double>::quiet_NaN();
  double band = std::numeric_limits<double>::quiet_NaN();
  int threads = 1;
  double foot_tol = 1e-9;
  // Net-local minimum neighbourhood, in units of mesh(F).
  double local_mult = 3.0;
  // lemma43 skips the equality dichotomy for q within proximity_mult * mesh(F).
  double proximity_mult = 3.0;
  // Rigidity ball radius around a local minimum.
  double rigidity_radius = 0.3;
};

// max_q |qF| <= pi/2, and |qp| = pi/2 for every p in F when q is within the
// band of equality.
CheckReport check_c3(const Space& space, const SubsetNet& F, const Net& Q,
                     const TheoremOptions& opts = {});

// Same bound at net-local minima of dist_q on F; isolated net points are
// skipped, rigidity is checked on the subset ball around the minimum.
CheckReport check_prop42(const Space& space, const SubsetNet& F, const Net& Q,
                         const TheoremOptions& opts = {});

// |qp| + |qp'| <= pi for a foot p and any p' in F. Near equality either
// |pp'| = pi or every subset point is at distance pi/2 from q.
CheckReport check_lemma43(const Space& space, const SubsetNet& F, const Net& Q,
                          const TheoremOptions& opts = {});

struct Lemma44Instance {
  const Space* space = nullptr;
  SubsetNet F;
  Point x1, x2;
  double a1 = 1.0, a2 = 1.0;
  double hypothesis_tol = 1e-9;
};

// Weighted cosine sum a1 cos|x1 y| + a2 cos|x2 y|.
double weighted_cos(const Lemma44Instance& inst, const Point& y);

// Equality on F, the right-angle sub-case, and the sign transfer to points
// off F. Throws HypothesisFailed when the sum is positive somewhere on F.
CheckReport check_lemma44(const Lemma44Instance& inst, const Net& H,
                          const TheoremOptions& opts = {});

// Suspension closure: the far pole lies on F and every meridian through a
// subset point stays in F.
CheckReport check_prop22(const Space& space, const SubsetNet& F, const TheoremOptions& opts = {});

// Base of a cone at its apex or of a suspension at either pole.
SpaceHandle directions_at_vertex(const Space& space, const Point& v);

struct VertexOptions {
  double inner_mult = 2.0;
  double outer_mult = 10.0;
  double base_resolution = 0.05;
  double tol = std::numeric_limits<double>::quiet_NaN();
  int threads = 1;
};

// Projects subset points of the annulus around v to directions and checks
// quasi-convexity there; a single direction is checked against the
// pi/2-ball bound over the whole base. Witness points live in the base.
CheckReport check_c1_at_vertex(const Space& space, const SubsetNet& F, const Point& v,
                               const VertexOptions& opts = {});

}  // namespace qcx
