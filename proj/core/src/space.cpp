#include "qcx/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "qcx/error.hpp"
#include "qcx/parallel.hpp"

namespace qcx {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kAntipodalGap = 1e-12;

[[noreturn]] void foreign(const std::string& what) {
  throw Error(ErrorCode::kForeignPoint, what);
}

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidSpec, what);
}

double norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double c : x) s += c * c;
  return std::sqrt(s);
}

// Angle between unit vectors, accurate at both ends of [0, pi].
double vector_angle(const std::vector<double>& a, const std::vector<double>& b) {
  double minus = 0.0;
  double plus = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    const double s = a[i] + b[i];
    minus += d * d;
    plus += s * s;
  }
  return 2.0 * std::atan2(std::sqrt(minus), std::sqrt(plus));
}

std::vector<double> slerp(const std::vector<double>& a, const std::vector<double>& b,
                          double u) {
  double plus = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) plus += (a[i] + b[i]) * (a[i] + b[i]);
  if (std::sqrt(plus) <= kAntipodalGap) {
    throw Error(ErrorCode::kAmbiguousGeodesic, "antipodal endpoints have no unique minimal arc");
  }
  const double angle = vector_angle(a, b);
  std::vector<double> out(a.size());
  if (angle == 0.0) return a;
  const double s = std::sin(angle);
  const double wa = std::sin((1.0 - u) * angle) / s;
  const double wb = std::sin(u * angle) / s;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = wa * a[i] + wb * b[i];
  const double n = norm(out);
  for (double& c : out) c /= n;
  return out;
}

// sin^2(d/2) and cos^2(d/2) for the suspension metric.
double suspension_dist(double t, double s, double theta) {
  const double prod = std::sin(t) * std::sin(s);
  const double a = std::sin(0.5 * (t - s));
  const double b = std::cos(0.5 * (t + s));
  const double h = std::sin(0.5 * theta);
  const double c = std::cos(0.5 * theta);
  const double sin2 = std::max(0.0, a * a + prod * h * h);
  const double cos2 = std::max(0.0, b * b + prod * c * c);
  return 2.0 * std::atan2(std::sqrt(sin2), std::sqrt(cos2));
}

double join_dist(double t, double s, double theta1, double theta2) {
  const double cc = std::cos(t) * std::cos(s);
  const double ss = std::sin(t) * std::sin(s);
  const double a = std::sin(0.5 * (t - s));
  const double h1 = std::sin(0.5 * theta1);
  const double h2 = std::sin(0.5 * theta2);
  const double c1 = std::cos(0.5 * theta1);
  const double c2 = std::cos(0.5 * theta2);
  const double sin2 = std::max(0.0, a * a + cc * h1 * h1 + ss * h2 * h2);
  const double cos2 = std::max(0.0, a * a + cc * c1 * c1 + ss * c2 * c2);
  return 2.0 * std::atan2(std::sqrt(sin2), std::sqrt(cos2));
}

// Position along a base geodesic for an azimuth phi out of a total opening
// theta (theta already truncated at pi).
Point base_along(const Space& base, const Point& a, const Point& b, double theta, double phi,
                 bool through_vertex_side_b, unsigned branch) {
  if (theta <= 0.0) return a;
  if (theta >= kPi) return through_vertex_side_b ? b : a;
  const double f = std::clamp(phi / theta, 0.0, 1.0);
  if (f == 0.0) return a;
  if (f == 1.0) return b;
  return base.geodesic_point(a, b, f, branch);
}

double implied_k(const SpaceSpec& spec, const std::vector<SpaceHandle>& children) {
  switch (spec.kind) {
    case Kind::kSphere: return 1.0;
    case Kind::kCircle: return spec.perimeter <= 2.0 * kPi + 1e-12 ? 1.0 : 0.0;
    case Kind::kLine:
    case Kind::kHalfLine: return 0.0;
    case Kind::kProduct:
      return std::min({children[0]->declared_k(), children[1]->declared_k(), 0.0});
    case Kind::kCone: return 0.0;
    case Kind::kSuspension:
    case Kind::kJoin: return 1.0;
    // Graphs approximate a space whose bound the caller declares.
    case Kind::kGraph: return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

}  // namespace

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::kSphere: return "Sphere";
    case Kind::kCircle: return "Circle";
    case Kind::kLine: return "Line";
    case Kind::kHalfLine: return "HalfLine";
    case Kind::kProduct: return "Product";
    case Kind::kCone: return "Cone";
    case Kind::kSuspension: return "Suspension";
    case Kind::kJoin: return "Join";
    case Kind::kGraph: return "Graph";
  }
  return "Unknown";
}

SpaceSpec SpaceSpec::sphere(int dim) {
  SpaceSpec s;
  s.kind = Kind::kSphere;
  s.dim = dim;
  return s;
}

SpaceSpec SpaceSpec::circle(double perimeter) {
  SpaceSpec s;
  s.kind = Kind::kCircle;
  s.perimeter = perimeter;
  return s;
}

SpaceSpec SpaceSpec::line() {
  SpaceSpec s;
  s.kind = Kind::kLine;
  return s;
}

SpaceSpec SpaceSpec::half_line() {
  SpaceSpec s;
  s.kind = Kind::kHalfLine;
  return s;
}

SpaceSpec SpaceSpec::product(SpaceSpec a, SpaceSpec b) {
  SpaceSpec s;
  s.kind = Kind::kProduct;
  s.children = {std::move(a), std::move(b)};
  return s;
}

SpaceSpec SpaceSpec::cone(SpaceSpec base) {
  SpaceSpec s;
  s.kind = Kind::kCone;
  s.children = {std::move(base)};
  return s;
}

SpaceSpec SpaceSpec::suspension(SpaceSpec base) {
  SpaceSpec s;
  s.kind = Kind::kSuspension;
  s.children = {std::move(base)};
  return s;
}

SpaceSpec SpaceSpec::join(SpaceSpec a, SpaceSpec b) {
  SpaceSpec s;
  s.kind = Kind::kJoin;
  s.children = {std::move(a), std::move(b)};
  return s;
}

SpaceSpec SpaceSpec::graph_of(GraphData data, double k) {
  SpaceSpec s;
  s.kind = Kind::kGraph;
  s.k = k;
  s.graph = std::make_shared<const GraphData>(std::move(data));
  return s;
}

Point sphere_point(std::vector<double> v) {
  Point p;
  p.kind = Kind::kSphere;
  p.v = std::move(v);
  return p;
}

Point circle_point(double t) {
  Point p;
  p.kind = Kind::kCircle;
  p.t = t;
  return p;
}

Point line_point(double t) {
  Point p;
  p.kind = Kind::kLine;
  p.t = t;
  return p;
}

Point half_line_point(double t) {
  Point p;
  p.kind = Kind::kHalfLine;
  p.t = t;
  return p;
}

Point product_point(Point a, Point b) {
  Point p;
  p.kind = Kind::kProduct;
  p.sub = {std::move(a), std::move(b)};
  return p;
}

Point cone_point(double t, Point base) {
  Point p;
  p.kind = Kind::kCone;
  p.t = t;
  p.sub = {std::move(base)};
  return p;
}

Point suspension_point(double t, Point base) {
  Point p;
  p.kind = Kind::kSuspension;
  p.t = t;
  p.sub = {std::move(base)};
  return p;
}

Point join_point(double t, Point p1, Point p2) {
  Point p;
  p.kind = Kind::kJoin;
  p.t = t;
  p.sub = {std::move(p1), std::move(p2)};
  return p;
}

Point graph_point(int node) {
  Point p;
  p.kind = Kind::kGraph;
  p.node = node;
  return p;
}

SpaceHandle Space::build(const SpaceSpec& spec, int threads) {
  std::shared_ptr<Space> s(new Space());
  s->spec_ = spec;
  switch (spec.kind) {
    case Kind::kSphere:
      if (spec.dim < 1) invalid("Sphere dimension must be >= 1");
      break;
    case Kind::kCircle:
      if (!(spec.perimeter > 0.0) || !std::isfinite(spec.perimeter)) {
        invalid("Circle perimeter must be > 0");
      }
      break;
    case Kind::kLine:
    case Kind::kHalfLine:
      break;
    case Kind::kProduct:
    case Kind::kJoin:
      if (spec.children.size() != 2) invalid(kind_name(spec.kind) + " needs two factors");
      break;
    case Kind::kCone:
    case Kind::kSuspension:
      if (spec.children.size() != 1) invalid(kind_name(spec.kind) + " needs one base");
      break;
    case Kind::kGraph:
      if (!spec.graph) invalid("Graph space without graph payload");
      if (!spec.k) invalid("Graph space must declare its curvature bound k");
      break;
  }
  for (const SpaceSpec& c : spec.children) s->children_.push_back(build(c, threads));
  if (spec.kind == Kind::kCone || spec.kind == Kind::kSuspension || spec.kind == Kind::kJoin) {
    for (const SpaceHandle& c : s->children_) {
      if (c->declared_k() < 1.0) {
        invalid(kind_name(spec.kind) + " base must have curvature bound >= 1 (got " +
                c->describe() + ")");
      }
    }
  }
  const double implied = implied_k(spec, s->children_);
  if (spec.k) {
    if (!std::isfinite(*spec.k)) invalid("declared k must be finite");
    if (*spec.k > implied + 1e-12) {
      std::ostringstream os;
      os << "declared k=" << *spec.k << " exceeds the bound " << implied << " of "
         << s->describe();
      invalid(os.str());
    }
    s->declared_k_ = *spec.k;
  } else {
    s->declared_k_ = implied;
  }
  if (spec.kind == Kind::kGraph) s->compute_all_pairs(threads);
  return s;
}

std::string Space::describe() const {
  std::ostringstream os;
  os.precision(12);
  os << kind_name(kind());
  switch (kind()) {
    case Kind::kSphere: os << "(" << spec_.dim << ")"; break;
    case Kind::kCircle: os << "(" << spec_.perimeter << ")"; break;
    case Kind::kProduct:
    case Kind::kJoin:
      os << "(" << children_[0]->describe() << ", " << children_[1]->describe() << ")";
      break;
    case Kind::kCone:
    case Kind::kSuspension: os << "(" << children_[0]->describe() << ")"; break;
    case Kind::kGraph: os << "(" << n_ << " nodes)"; break;
    default: break;
  }
  return os.str();
}

void Space::validate(const Point& p) const {
  if (p.kind != kind()) {
    foreign("point tagged " + kind_name(p.kind) + " used in " + describe());
  }
  switch (kind()) {
    case Kind::kSphere: {
      if (p.v.size() != static_cast<std::size_t>(spec_.dim + 1)) {
        foreign("sphere point has wrong coordinate count");
      }
      if (std::abs(norm(p.v) - 1.0) > 1e-12) foreign("sphere point is not a unit vector");
      break;
    }
    case Kind::kCircle:
    case Kind::kLine:
      if (!std::isfinite(p.t)) foreign("non-finite parameter");
      break;
    case Kind::kHalfLine:
      if (!(p.t >= 0.0) || !std::isfinite(p.t)) foreign("half-line parameter must be >= 0");
      break;
    case Kind::kProduct:
    case Kind::kJoin:
      if (p.sub.size() != 2) foreign(kind_name(kind()) + " point needs two components");
      children_[0]->validate(p.sub[0]);
      children_[1]->validate(p.sub[1]);
      if (kind() == Kind::kJoin && !(p.t >= 0.0 && p.t <= kHalfPi)) {
        foreign("join parameter outside [0, pi/2]");
      }
      break;
    case Kind::kCone:
    case Kind::kSuspension:
      if (p.sub.size() != 1) foreign(kind_name(kind()) + " point needs a base point");
      children_[0]->validate(p.sub[0]);
      if (!(p.t >= 0.0) || !std::isfinite(p.t)) foreign("radius/latitude must be >= 0");
      if (kind() == Kind::kSuspension && p.t > kPi) foreign("latitude exceeds pi");
      break;
    case Kind::kGraph:
      if (p.node < 0 || static_cast<std::size_t>(p.node) >= n_) foreign("unknown graph node");
      break;
  }
}

Point Space::origin() const {
  switch (kind()) {
    case Kind::kSphere: {
      std::vector<double> v(spec_.dim + 1, 0.0);
      v[0] = 1.0;
      return sphere_point(std::move(v));
    }
    case Kind::kCircle: return circle_point(0.0);
    case Kind::kLine: return line_point(0.0);
    case Kind::kHalfLine: return half_line_point(0.0);
    case Kind::kProduct: return product_point(children_[0]->origin(), children_[1]->origin());
    case Kind::kCone: return cone_point(0.0, children_[0]->origin());
    case Kind::kSuspension: return suspension_point(0.0, children_[0]->origin());
    case Kind::kJoin:
      return join_point(0.0, children_[0]->origin(), children_[1]->origin());
    case Kind::kGraph: return graph_point(0);
  }
  return Point{};
}

Point Space::canonical(const Point& p) const {
  Point c = p;
  switch (kind()) {
    case Kind::kCircle: {
      const double L = spec_.perimeter;
      double t = std::fmod(p.t, L);
      if (t < 0.0) t += L;
      if (t >= L) t = 0.0;
      c.t = t;
      break;
    }
    case Kind::kProduct:
      c.sub[0] = children_[0]->canonical(p.sub[0]);
      c.sub[1] = children_[1]->canonical(p.sub[1]);
      break;
    case Kind::kCone:
      if (c.t <= 0.0) {
        c.t = 0.0;
        c.sub[0] = children_[0]->origin();
      } else {
        c.sub[0] = children_[0]->canonical(p.sub[0]);
      }
      break;
    case Kind::kSuspension:
      if (c.t <= 0.0 || c.t >= kPi) {
        c.t = c.t <= 0.0 ? 0.0 : kPi;
        c.sub[0] = children_[0]->origin();
      } else {
        c.sub[0] = children_[0]->canonical(p.sub[0]);
      }
      break;
    case Kind::kJoin:
      c.sub[0] = children_[0]->canonical(p.sub[0]);
      c.sub[1] = children_[1]->canonical(p.sub[1]);
      if (c.t <= 0.0) {
        c.t = 0.0;
        c.sub[1] = children_[1]->origin();
      } else if (c.t >= kHalfPi) {
        c.t = kHalfPi;
        c.sub[0] = children_[0]->origin();
      }
      break;
    default:
      break;
  }
  return c;
}

bool Space::same_point(const Point& p, const Point& q) const {
  return canonical(p) == canonical(q);
}

double Space::dist(const Point& p, const Point& q) const {
  if (p.kind != kind() || q.kind != kind()) {
    foreign("point tagged " + kind_name(p.kind == kind() ? q.kind : p.kind) + " used in " +
            describe());
  }
  return dist_unchecked(p, q);
}

double Space::dist_unchecked(const Point& p, const Point& q) const {
  switch (kind()) {
    case Kind::kSphere:
      if (p.v.size() != q.v.size() || p.v.size() != static_cast<std::size_t>(spec_.dim + 1)) {
        foreign("sphere point has wrong coordinate count");
      }
      return vector_angle(p.v, q.v);
    case Kind::kCircle: {
      const double L = spec_.perimeter;
      const double d = std::fmod(std::abs(p.t - q.t), L);
      return std::min(d, L - d);
    }
    case Kind::kLine:
    case Kind::kHalfLine: return std::abs(p.t - q.t);
    case Kind::kProduct: {
      const double a = children_[0]->dist(p.sub.at(0), q.sub.at(0));
      const double b = children_[1]->dist(p.sub.at(1), q.sub.at(1));
      return std::hypot(a, b);
    }
    case Kind::kCone: {
      const double theta = std::min(children_[0]->dist(p.sub.at(0), q.sub.at(0)), kPi);
      const double h = std::sin(0.5 * theta);
      const double dt = p.t - q.t;
      return std::sqrt(dt * dt + 4.0 * p.t * q.t * h * h);
    }
    case Kind::kSuspension: {
      const double theta = std::min(children_[0]->dist(p.sub.at(0), q.sub.at(0)), kPi);
      return suspension_dist(p.t, q.t, theta);
    }
    case Kind::kJoin: {
      const double t1 = std::min(children_[0]->dist(p.sub.at(0), q.sub.at(0)), kPi);
      const double t2 = std::min(children_[1]->dist(p.sub.at(1), q.sub.at(1)), kPi);
      return join_dist(p.t, q.t, t1, t2);
    }
    case Kind::kGraph:
      if (p.node < 0 || q.node < 0 || static_cast<std::size_t>(p.node) >= n_ ||
          static_cast<std::size_t>(q.node) >= n_) {
        foreign("unknown graph node");
      }
      return apsp_[static_cast<std::size_t>(p.node) * n_ + static_cast<std::size_t>(q.node)];
  }
  return 0.0;
}

double Space::cos_dist(const Point& p, const Point& q) const {
  if (kind() == Kind::kSphere && p.kind == kind() && q.kind == kind() &&
      p.v.size() == q.v.size()) {
    double dot = 0.0;
    for (std::size_t i = 0; i < p.v.size(); ++i) dot += p.v[i] * q.v[i];
    return std::clamp(dot, -1.0, 1.0);
  }
  return std::cos(dist(p, q));
}

Point Space::geodesic_point(const Point& p, const Point& q, double u, unsigned branch) const {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw Error(ErrorCode::kInvalidSpec, "geodesic fraction outside [0, 1]");
  }
  validate(p);
  validate(q);
  return geodesic_unchecked(p, q, u, branch);
}

std::vector<Point> Space::geodesic_points(const Point& p, const Point& q, double u) const {
  std::vector<Point> out;
  for (unsigned branch = 0; branch < 8; ++branch) {
    Point g = geodesic_point(p, q, u, branch);
    const bool seen =
        std::any_of(out.begin(), out.end(), [&](const Point& h) { return same_point(g, h); });
    if (!seen) out.push_back(std::move(g));
  }
  return out;
}

Point Space::geodesic_unchecked(const Point& p, const Point& q, double u, unsigned branch) const {
  if (u == 0.0) return p;
  if (u == 1.0) return q;
  switch (kind()) {
    case Kind::kSphere: return sphere_point(slerp(p.v, q.v, u));
    case Kind::kCircle: {
      const double L = spec_.perimeter;
      double delta = std::fmod(q.t - p.t, L);
      if (delta < 0.0) delta += L;
      const bool antipodal = std::abs(delta - 0.5 * L) <= 1e-12 * L;
      const bool forward = antipodal ? (branch & 1u) == 0 : delta <= 0.5 * L;
      const double step = forward ? u * delta : -u * (L - delta);
      return canonical(circle_point(p.t + step));
    }
    case Kind::kLine: return line_point(p.t + u * (q.t - p.t));
    case Kind::kHalfLine: return half_line_point(p.t + u * (q.t - p.t));
    case Kind::kProduct:
      return product_point(children_[0]->geodesic_point(p.sub[0], q.sub[0], u, branch),
                           children_[1]->geodesic_point(p.sub[1], q.sub[1], u, branch >> 1));
    case Kind::kCone: {
      const Space& base = *children_[0];
      const double theta = std::min(base.dist(p.sub[0], q.sub[0]), kPi);
      const double x = (1.0 - u) * p.t + u * q.t * std::cos(theta);
      const double y = u * q.t * std::sin(theta);
      const double r = std::hypot(x, y);
      if (r == 0.0) return origin();
      double phi = std::atan2(y, x);
      if (theta >= kPi) phi = x >= 0.0 ? 0.0 : kPi;
      if (p.t == 0.0) return cone_point(r, q.sub[0]);
      if (q.t == 0.0) return cone_point(r, p.sub[0]);
      return cone_point(r, base_along(base, p.sub[0], q.sub[0], theta, phi, x < 0.0, branch));
    }
    case Kind::kSuspension: {
      const Space& base = *children_[0];
      const double theta = std::min(base.dist(p.sub[0], q.sub[0]), kPi);
      const std::vector<double> a = {std::sin(p.t), 0.0, std::cos(p.t)};
      const std::vector<double> b = {std::sin(q.t) * std::cos(theta),
                                     std::sin(q.t) * std::sin(theta), std::cos(q.t)};
      const std::vector<double> m = slerp(a, b, u);
      const double lat = std::atan2(std::hypot(m[0], m[1]), m[2]);
      if (std::hypot(m[0], m[1]) == 0.0) return canonical(suspension_point(lat, base.origin()));
      double phi = std::atan2(m[1], m[0]);
      if (theta >= kPi) phi = m[0] >= 0.0 ? 0.0 : kPi;
      Point b0 = p.sub[0];
      Point b1 = q.sub[0];
      if (p.t == 0.0 || p.t == kPi) return canonical(suspension_point(lat, b1));
      if (q.t == 0.0 || q.t == kPi) return canonical(suspension_point(lat, b0));
      return canonical(
          suspension_point(lat, base_along(base, b0, b1, theta, phi, m[0] < 0.0, branch)));
    }
    case Kind::kJoin: {
      const Space& s1 = *children_[0];
      const Space& s2 = *children_[1];
      const double th1 = std::min(s1.dist(p.sub[0], q.sub[0]), kPi);
      const double th2 = std::min(s2.dist(p.sub[1], q.sub[1]), kPi);
      const std::vector<double> a = {std::cos(p.t), 0.0, std::sin(p.t), 0.0};
      const std::vector<double> b = {std::cos(q.t) * std::cos(th1), std::cos(q.t) * std::sin(th1),
                                     std::sin(q.t) * std::cos(th2), std::sin(q.t) * std::sin(th2)};
      const std::vector<double> m = slerp(a, b, u);
      const double r1 = std::hypot(m[0], m[1]);
      const double r2 = std::hypot(m[2], m[3]);
      const double t = std::atan2(r2, r1);
      double phi1 = std::atan2(m[1], m[0]);
      double phi2 = std::atan2(m[3], m[2]);
      if (th1 >= kPi) phi1 = m[0] >= 0.0 ? 0.0 : kPi;
      if (th2 >= kPi) phi2 = m[2] >= 0.0 ? 0.0 : kPi;
      // A component with zero weight at an endpoint carries no direction.
      Point x1 = (std::cos(p.t) == 0.0 || p.t >= kHalfPi) ? q.sub[0]
                 : (q.t >= kHalfPi)                       ? p.sub[0]
                 : base_along(s1, p.sub[0], q.sub[0], th1, phi1, m[0] < 0.0, branch);
      Point x2 = (p.t == 0.0) ? q.sub[1]
                 : (q.t == 0.0) ? p.sub[1]
                                : base_along(s2, p.sub[1], q.sub[1], th2, phi2, m[2] < 0.0, branch >> 1);
      return canonical(join_point(t, std::move(x1), std::move(x2)));
    }
    case Kind::kGraph: {
      const std::size_t a = static_cast<std::size_t>(p.node);
      const std::size_t b = static_cast<std::size_t>(q.node);
      const double total = apsp_[a * n_ + b];
      int best = p.node;
      double best_err = std::numeric_limits<double>::infinity();
      for (std::size_t m = 0; m < n_; ++m) {
        const double err = std::abs(apsp_[a * n_ + m] - u * total) +
                           std::abs(apsp_[m * n_ + b] - (1.0 - u) * total);
        if (err < best_err) {
          best_err = err;
          best = static_cast<int>(m);
        }
      }
      return graph_point(best);
    }
  }
  return p;
}

std::size_t Space::node_count() const { return n_; }

double Space::node_dist(int i, int j) const {
  return apsp_.at(static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j));
}

const std::vector<std::string>& Space::node_ids() const {
  static const std::vector<std::string> kEmpty;
  return spec_.graph ? spec_.graph->ids : kEmpty;
}

int Space::node_index(const std::string& id) const {
  const auto& ids = node_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return static_cast<int>(i);
  }
  foreign("unknown graph node id '" + id + "'");
}

void Space::compute_all_pairs(int threads) {
  const GraphData& g = *spec_.graph;
  n_ = g.ids.size();
  if (n_ == 0) invalid("graph has no nodes");
  if (n_ > 5000) invalid("graph exceeds the 5000-node budget");
  {
    std::unordered_map<std::string, int> seen;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!seen.emplace(g.ids[i], static_cast<int>(i)).second) {
        invalid("duplicate graph node id '" + g.ids[i] + "'");
      }
    }
  }
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<std::pair<int, double>>> adj(n_);
  for (const GraphEdge& e : g.edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n_ ||
        static_cast<std::size_t>(e.v) >= n_) {
      invalid("graph edge references an unknown node");
    }
    if (e.u == e.v) invalid("graph edge is a self-loop");
    if (!(e.w > 0.0) || !std::isfinite(e.w)) invalid("graph edge weight must be > 0");
    adj[e.u].emplace_back(e.v, e.w);
    adj[e.v].emplace_back(e.u, e.w);
  }
  const double edges = static_cast<double>(g.edges.size());
  const double n = static_cast<double>(n_);
  const bool dense = edges * std::log2(n + 1.0) > 0.5 * n * n;
  std::vector<double> weight;
  if (dense) {
    weight.assign(n_ * n_, inf);
    for (std::size_t i = 0; i < n_; ++i) {
      for (const auto& [j, w] : adj[i]) {
        double& slot = weight[i * n_ + static_cast<std::size_t>(j)];
        slot = std::min(slot, w);
      }
    }
  }
  apsp_.assign(n_ * n_, inf);
  parallel_for(n_, threads, [&](std::size_t src) {
    double* row = &apsp_[src * n_];
    row[src] = 0.0;
    if (dense) {
      std::vector<char> done(n_, 0);
      for (std::size_t it = 0; it < n_; ++it) {
        std::size_t best = n_;
        double bd = inf;
        for (std::size_t j = 0; j < n_; ++j) {
          if (!done[j] && row[j] < bd) {
            bd = row[j];
            best = j;
          }
        }
        if (best == n_) break;
        done[best] = 1;
        const double* w = &weight[best * n_];
        for (std::size_t j = 0; j < n_; ++j) {
          const double cand = bd + w[j];
          if (cand < row[j]) row[j] = cand;
        }
      }
    } else {
      using Item = std::pair<double, std::size_t>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      heap.emplace(0.0, src);
      while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d > row[v]) continue;
        for (const auto& [j, w] : adj[v]) {
          const double cand = d + w;
          if (cand < row[j]) {
            row[j] = cand;
            heap.emplace(cand, static_cast<std::size_t>(j));
          }
        }
      }
    }
  });
  for (std::size_t i = 0; i < n_ * n_; ++i) {
    if (!std::isfinite(apsp_[i])) invalid("graph is disconnected");
  }
  // Single-source runs can differ in the last bit between directions.
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double m = std::min(apsp_[i * n_ + j], apsp_[j * n_ + i]);
      apsp_[i * n_ + j] = m;
      apsp_[j * n_ + i] = m;
    }
  }
}

}  // namespace qcx
