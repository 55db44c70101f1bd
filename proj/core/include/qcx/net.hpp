#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcx/space.hpp"

namespace qcx {

struct NetOptions {
  double resolution = 0.1;
  std::uint64_t seed = 0;
  std::size_t cap = 5000;
  // Non-compact factors are sampled on [-radius, radius] / [0, radius].
  double radius = 3.0;
  std::size_t probes = 400;
};

struct Net {
  std::vector<Point> points;
  double mesh = 0.0;
  std::uint64_t seed = 0;
  double resolution = 0.0;
};

// Deterministic stratified sample; BudgetExceeded past opts.cap points.
Net build_net(const Space& space, const NetOptions& opts);

// Largest nearest-neighbour gap; 0 for fewer than two points. When `sample`
// is nonzero only that many evenly strided points are examined.
double nearest_gap(const Space& space, const std::vector<Point>& pts, std::size_t sample = 0);

// Random point of the sampled region of the space.
Point random_point(const Space& space, std::mt19937_64& rng, double radius = 3.0);

struct SubsetNet {
  Net net;
  std::string label;
  // Finite point lists carry the ambient mesh instead of their own gaps.
  bool discrete = false;
  // Indices where a non-compact subset was cut off by the sampling radius.
  // A query whose foot lands on one of these has no trustworthy foot.
  std::vector<std::size_t> cut_ends;

  bool is_cut_end(std::size_t i) const;
  std::size_t size() const { return net.points.size(); }
  const Point& operator[](std::size_t i) const { return net.points[i]; }
};

// Net indices within tol of the minimum distance from q, ascending.
std::vector<std::size_t> foot_points(const Space& space, const SubsetNet& F, const Point& q,
                                     double tol = 1e-9);

// Index of the first nearest net point and its distance.
std::pair<std::size_t, double> nearest(const Space& space, const std::vector<Point>& pts,
                                       const Point& q);

}  // namespace qcx
