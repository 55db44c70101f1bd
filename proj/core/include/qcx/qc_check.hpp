#pragma once

#include <limits>
#include <string>

#include "qcx/net.hpp"
#include "qcx/report.hpp"
#include "qcx/space.hpp"

namespace qcx {

struct CheckOptions {
  // NaN selects the per-check default.
  double tol = std::numeric_limits<double>::quiet_NaN();
  int threads = 1;
  // q closer than proximity_mult * mesh to F is skipped.
  double proximity_mult = 3.0;
  // Per-triple angular slack slack_mult * mesh(F) / |pq| for the net foot.
  double slack_mult = 1.0;
  double foot_tol = 1e-9;
  // Use net-local minima of dist_q on F instead of global feet.
  bool local_minima = false;
  // Replace comparison angles by true angles measured along geodesics of
  // length true_angle_eps (qc and lqc only).
  bool true_angles = false;
  double true_angle_eps = 1e-5;

  // Extremal probe: scale probe_mult * mesh, slope allowance slope_c * mesh / scale,
  // q skipped below extremal_cutoff_mult * mesh.
  double probe_mult = 3.0;
  double slope_c = 1.0;
  double extremal_cutoff_mult = 6.0;

  // Midpoint test pair scale; NaN selects 4 * mesh(F).
  double pair_scale = std::numeric_limits<double>::quiet_NaN();
};

// Angle at p between geodesics towards q and r, estimated from the comparison
// angle of the points at distance eps along them. Among finitely many
// minimal geodesics the smallest angle is taken; an infinite family (antipodal
// sphere points) yields 0.
double true_angle(const Space& space, const Point& p, const Point& q, const Point& r,
                  double eps = 1e-5);

CheckReport check_quasi_convex(const Space& space, const SubsetNet& F, const Net& Q,
                               const CheckOptions& opts = {});

CheckReport check_local_quasi_convex(const Space& space, const SubsetNet& F, double radius,
                                     const Net& Q, const CheckOptions& opts = {});

CheckReport check_extremal(const Space& space, const SubsetNet& F, const Net& Q,
                           const CheckOptions& opts = {});

CheckReport check_locally_convex(const Space& space, const SubsetNet& F,
                                 const CheckOptions& opts = {});

struct Classification {
  CheckReport locally_convex;
  CheckReport extremal;
  CheckReport quasi_convex;
  CheckReport locally_quasi_convex;
  bool implications_hold = true;
  std::string implication_note;
};

// Runs the four checks on shared distance tables and records whether
// extremal => quasi-convex => locally quasi-convex holds on the verdicts.
Classification classify(const Space& space, const SubsetNet& F, const Net& Q, double radius,
                        const CheckOptions& opts = {});

}  // namespace qcx
