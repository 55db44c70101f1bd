#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qcx {

enum class Kind {
  kSphere,
  kCircle,
  kLine,
  kHalfLine,
  kProduct,
  kCone,
  kSuspension,
  kJoin,
  kGraph,
};

std::string kind_name(Kind kind);

struct GraphEdge {
  int u = 0;
  int v = 0;
  double w = 0.0;
};

struct GraphData {
  std::vector<std::string> ids;
  std::vector<GraphEdge> edges;
};

struct SpaceSpec {
  Kind kind = Kind::kLine;
  int dim = 0;             // sphere dimension
  double perimeter = 0.0;  // circle length
  std::vector<SpaceSpec> children;
  std::optional<double> k;  // declared lower curvature bound
  std::shared_ptr<const GraphData> graph;

  static SpaceSpec sphere(int dim);
  static SpaceSpec circle(double perimeter);
  static SpaceSpec line();
  static SpaceSpec half_line();
  static SpaceSpec product(SpaceSpec a, SpaceSpec b);
  static SpaceSpec cone(SpaceSpec base);
  static SpaceSpec suspension(SpaceSpec base);
  static SpaceSpec join(SpaceSpec a, SpaceSpec b);
  static SpaceSpec graph_of(GraphData data, double k);
};

// Coordinates follow the owning constructor:
//   sphere: v is a unit vector; circle/line/half-line: t is the parameter;
//   product: sub = {a, b}; cone: t radius, sub = {base};
//   suspension: t latitude in [0, pi], sub = {base};
//   join: t in [0, pi/2], sub = {p1, p2}; graph: node index.
struct Point {
  Kind kind = Kind::kLine;
  double t = 0.0;
  std::vector<double> v;
  std::vector<Point> sub;
  int node = -1;

  friend bool operator==(const Point&, const Point&) = default;
};

Point sphere_point(std::vector<double> v);
Point circle_point(double t);
Point line_point(double t);
Point half_line_point(double t);
Point product_point(Point a, Point b);
Point cone_point(double t, Point base);
Point suspension_point(double t, Point base);
Point join_point(double t, Point p1, Point p2);
Point graph_point(int node);

class Space;
using SpaceHandle = std::shared_ptr<const Space>;

class Space {
 public:
  // Validates the spec and, for graphs, computes all-pairs distances using up
  // to `threads` workers.
  static SpaceHandle build(const SpaceSpec& spec, int threads = 1);

  Kind kind() const { return spec_.kind; }
  const SpaceSpec& spec() const { return spec_; }
  double declared_k() const { return declared_k_; }
  const SpaceHandle& child(std::size_t i) const { return children_.at(i); }
  std::string describe() const;

  // Throws ForeignPoint when p does not belong to this space.
  void validate(const Point& p) const;
  Point canonical(const Point& p) const;
  bool same_point(const Point& p, const Point& q) const;
  // Representative with every coordinate zeroed (apex, pole, node 0, ...).
  Point origin() const;

  double dist(const Point& p, const Point& q) const;
  // Cosine of the distance; exact inner product on spheres.
  double cos_dist(const Point& p, const Point& q) const;
  // Point at fraction u along a minimal geodesic from p to q. Antipodal
  // circle points (also as factors or bases) have two minimal arcs; bit i of
  // `branch` picks the side at the i-th such circle, 0 being the canonical one.
  Point geodesic_point(const Point& p, const Point& q, double u, unsigned branch = 0) const;
  // The distinct points over all branches. Throws AmbiguousGeodesic when
  // the family is infinite (antipodal sphere points).
  std::vector<Point> geodesic_points(const Point& p, const Point& q, double u) const;

  // Graph accessors.
  std::size_t node_count() const;
  double node_dist(int i, int j) const;
  const std::vector<std::string>& node_ids() const;
  int node_index(const std::string& id) const;

 private:
  Space() = default;
  double dist_unchecked(const Point& p, const Point& q) const;
  Point geodesic_unchecked(const Point& p, const Point& q, double u, unsigned branch) const;
  void compute_all_pairs(int threads);

  SpaceSpec spec_;
  double declared_k_ = 0.0;
  std::vector<SpaceHandle> children_;
  std::size_t n_ = 0;
  std::vector<double> apsp_;
};

}  // namespace qcx
