#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "qcx/net.hpp"
#include "qcx/report.hpp"
#include "qcx/space.hpp"

namespace qcx {

// Points a_0..a_m with cumulative-length parameters t_i and energy
// m * sum |a_i a_{i+1}|^2.
struct Chain {
  std::vector<Point> points;
  std::vector<double> params;
  double energy = 0.0;
  std::size_t sweeps = 0;
  // Set when an exact pass over the net confirmed the energy is minimal.
  bool exact = false;

  int m() const { return static_cast<int>(points.size()) - 1; }
  double length() const { return params.empty() ? 0.0 : params.back(); }
};

Chain make_chain(const Space& space, std::vector<Point> points);
double chain_energy(const Space& space, const Chain& chain);

struct MinimizeOptions {
  std::size_t max_iters = 100000;
  // Stop once a sweep lowers the energy by less than eps (0 disables).
  double eps = 0.0;
  int threads = 1;
  // After descent, run the exact layered minimization when m * |F|^2 stays
  // within the budget and |F| within exact_max_points.
  bool exact = true;
  double exact_budget = 4e8;
  std::size_t exact_max_points = 4096;
};

// Coordinate descent on the interior points over the subset net, started
// from the projected uniform subdivision of an ambient geodesic. Descent can
// stall on chains that fold back on themselves, so an exact layered pass
// over the net follows when affordable and replaces a worse local minimum.
Chain minimize_chain(const Space& space, const SubsetNet& F, const Point& a0, const Point& am,
                     int m, const MinimizeOptions& opts = {});

CheckReport check_stationarity(const Space& space, const SubsetNet& F, const Chain& chain,
                               double tol = 0.0);

// Tolerance NaN selects 3 * mesh(P) * length on graph spaces; otherwise 1e-9
// for the second difference and 1e-6 for the angle comparison.
CheckReport check_second_difference(const Space& space, const Chain& chain, const Net& P,
                                    double tol = std::numeric_limits<double>::quiet_NaN());

CheckReport check_angle_comparison(const Space& space, const Chain& chain, const Net& P,
                                   double tol = std::numeric_limits<double>::quiet_NaN());

struct SmRow {
  int m = 0;
  double energy = 0.0;
  double gap = 0.0;
  double stationarity = 0.0;
};

struct SmTable {
  std::vector<SmRow> rows;
  double reference = 0.0;  // squared length of the largest-m minimizer
};

SmTable sm_convergence(const Space& space, const SubsetNet& F, const Point& a0, const Point& am,
                       const std::vector<int>& m_list, const MinimizeOptions& opts = {});

}  // namespace qcx
