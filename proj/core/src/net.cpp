#include "qcx/net.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qcx/error.hpp"

namespace qcx {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

struct Sampler {
  const NetOptions& opts;
  std::mt19937_64& rng;

  void check(std::size_t n) const {
    if (n > opts.cap) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "net needs " + std::to_string(n) + " points, cap is " +
                      std::to_string(opts.cap));
    }
  }

  std::size_t steps(double length, double res) const {
    const double n = std::ceil(length / res - 1e-12);
    if (n > static_cast<double>(opts.cap)) check(static_cast<std::size_t>(opts.cap) + 1);
    return std::max<std::size_t>(1, static_cast<std::size_t>(n));
  }

  std::vector<Point> sphere(int dim, double res) {
    std::vector<Point> out;
    if (dim == 1) {
      const std::size_t n = steps(2.0 * kPi, res);
      for (std::size_t i = 0; i < n; ++i) {
        const double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
        out.push_back(sphere_point({std::cos(a), std::sin(a)}));
      }
      return out;
    }
    if (dim == 2) {
      const std::size_t rings = std::max<std::size_t>(2, steps(kPi, res));
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      out.push_back(sphere_point({0.0, 0.0, 1.0}));
      for (std::size_t i = 1; i < rings; ++i) {
        const double colat = kPi * static_cast<double>(i) / static_cast<double>(rings);
        const std::size_t n = steps(2.0 * kPi * std::sin(colat), res);
        const double offset = unit(rng) * 2.0 * kPi / static_cast<double>(n);
        for (std::size_t j = 0; j < n; ++j) {
          const double a = offset + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
          out.push_back(sphere_point(
              {std::sin(colat) * std::cos(a), std::sin(colat) * std::sin(a), std::cos(colat)}));
        }
        check(out.size());
      }
      out.push_back(sphere_point({0.0, 0.0, -1.0}));
      return out;
    }
    // Higher dimensions: seeded uniform sample sized from the volume ratio.
    const double d = static_cast<double>(dim);
    const double area = 2.0 * std::pow(kPi, 0.5 * (d + 1.0)) / std::tgamma(0.5 * (d + 1.0));
    const double cell = std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0) * std::pow(res, d);
    const double want = std::ceil(4.0 * area / cell);
    if (want > static_cast<double>(opts.cap)) check(opts.cap + 1);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(want); ++i) {
      std::vector<double> v(static_cast<std::size_t>(dim) + 1);
      double n = 0.0;
      do {
        n = 0.0;
        for (double& c : v) {
          c = normal(rng);
          n += c * c;
        }
      } while (n == 0.0);
      n = std::sqrt(n);
      for (double& c : v) c /= n;
      out.push_back(sphere_point(std::move(v)));
    }
    return out;
  }

  std::vector<Point> interval(Kind kind, double lo, double hi, double res) {
    const std::size_t n = steps(hi - lo, res);
    std::vector<Point> out;
    for (std::size_t i = 0; i <= n; ++i) {
      const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
      Point p;
      p.kind = kind;
      p.t = t;
      out.push_back(std::move(p));
    }
    return out;
  }

  std::vector<Point> sample(const Space& s, double res) {
    switch (s.kind()) {
      case Kind::kSphere: return sphere(s.spec().dim, res);
      case Kind::kCircle: {
        const double L = s.spec().perimeter;
        const std::size_t n = steps(L, res);
        std::vector<Point> out;
        for (std::size_t i = 0; i < n; ++i) {
          out.push_back(circle_point(L * static_cast<double>(i) / static_cast<double>(n)));
        }
        return out;
      }
      case Kind::kLine: return interval(Kind::kLine, -opts.radius, opts.radius, res);
      case Kind::kHalfLine: return interval(Kind::kHalfLine, 0.0, opts.radius, res);
      case Kind::kProduct: {
        const auto a = sample(*s.child(0), res);
        const auto b = sample(*s.child(1), res);
        check(a.size() * b.size());
        std::vector<Point> out;
        for (const Point& x : a) {
          for (const Point& y : b) out.push_back(product_point(x, y));
        }
        return out;
      }
      case Kind::kCone: {
        const std::size_t n = steps(opts.radius, res);
        std::vector<Point> out = {s.origin()};
        for (std::size_t j = 1; j <= n; ++j) {
          const double t = opts.radius * static_cast<double>(j) / static_cast<double>(n);
          for (Point& b : sample(*s.child(0), res / t)) out.push_back(cone_point(t, std::move(b)));
          check(out.size());
        }
        return out;
      }
      case Kind::kSuspension: {
        const std::size_t n = std::max<std::size_t>(2, steps(kPi, res));
        std::vector<Point> out = {s.origin()};
        for (std::size_t j = 1; j < n; ++j) {
          const double t = kPi * static_cast<double>(j) / static_cast<double>(n);
          for (Point& b : sample(*s.child(0), res / std::sin(t))) {
            out.push_back(suspension_point(t, std::move(b)));
          }
          check(out.size());
        }
        out.push_back(s.canonical(suspension_point(kPi, s.child(0)->origin())));
        return out;
      }
      case Kind::kJoin: {
        const std::size_t n = std::max<std::size_t>(2, steps(kHalfPi, res));
        std::vector<Point> out;
        for (Point& a : sample(*s.child(0), res)) {
          out.push_back(s.canonical(join_point(0.0, std::move(a), s.child(1)->origin())));
        }
        for (std::size_t j = 1; j < n; ++j) {
          const double t = kHalfPi * static_cast<double>(j) / static_cast<double>(n);
          const auto a = sample(*s.child(0), res / std::cos(t));
          const auto b = sample(*s.child(1), res / std::sin(t));
          check(out.size() + a.size() * b.size());
          for (const Point& x : a) {
            for (const Point& y : b) out.push_back(join_point(t, x, y));
          }
        }
        for (Point& b : sample(*s.child(1), res)) {
          out.push_back(s.canonical(join_point(kHalfPi, s.child(0)->origin(), std::move(b))));
        }
        return out;
      }
      case Kind::kGraph: {
        std::vector<Point> out;
        for (std::size_t i = 0; i < s.node_count(); ++i) out.push_back(graph_point(static_cast<int>(i)));
        return out;
      }
    }
    return {};
  }
};

}  // namespace

std::pair<std::size_t, double> nearest(const Space& space, const std::vector<Point>& pts,
                                       const Point& q) {
  std::size_t best = 0;
  double bd = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = space.dist(q, pts[i]);
    if (d < bd) {
      bd = d;
      best = i;
    }
  }
  return {best, bd};
}

double nearest_gap(const Space& space, const std::vector<Point>& pts, std::size_t sample) {
  if (pts.size() < 2) return 0.0;
  const std::size_t n = pts.size();
  const std::size_t stride = (sample == 0 || sample >= n) ? 1 : (n + sample - 1) / sample;
  double gap = 0.0;
  for (std::size_t i = 0; i < n; i += stride) {
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      bd = std::min(bd, space.dist(pts[i], pts[j]));
    }
    gap = std::max(gap, bd);
  }
  return gap;
}

Point random_point(const Space& space, std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  switch (space.kind()) {
    case Kind::kSphere: {
      std::normal_distribution<double> normal(0.0, 1.0);
      std::vector<double> v(static_cast<std::size_t>(space.spec().dim) + 1);
      double n = 0.0;
      do {
        n = 0.0;
        for (double& c : v) {
          c = normal(rng);
          n += c * c;
        }
      } while (n == 0.0);
      n = std::sqrt(n);
      for (double& c : v) c /= n;
      return sphere_point(std::move(v));
    }
    case Kind::kCircle: return circle_point(unit(rng) * space.spec().perimeter);
    case Kind::kLine: return line_point((2.0 * unit(rng) - 1.0) * radius);
    case Kind::kHalfLine: return half_line_point(unit(rng) * radius);
    case Kind::kProduct: {
      Point a = random_point(*space.child(0), rng, radius);
      Point b = random_point(*space.child(1), rng, radius);
      return product_point(std::move(a), std::move(b));
    }
    case Kind::kCone: {
      const double t = radius * std::sqrt(unit(rng));
      return space.canonical(cone_point(t, random_point(*space.child(0), rng, radius)));
    }
    case Kind::kSuspension: {
      const double t = std::acos(1.0 - 2.0 * unit(rng));
      return space.canonical(suspension_point(t, random_point(*space.child(0), rng, radius)));
    }
    case Kind::kJoin: {
      const double t = std::asin(std::sqrt(unit(rng)));
      Point a = random_point(*space.child(0), rng, radius);
      Point b = random_point(*space.child(1), rng, radius);
      return space.canonical(join_point(t, std::move(a), std::move(b)));
    }
    case Kind::kGraph: {
      std::uniform_int_distribution<std::size_t> pick(0, space.node_count() - 1);
      return graph_point(static_cast<int>(pick(rng)));
    }
  }
  return space.origin();
}

Net build_net(const Space& space, const NetOptions& opts) {
  if (!(opts.resolution > 0.0) || !std::isfinite(opts.resolution)) {
    throw Error(ErrorCode::kInvalidSpec, "resolution must be > 0");
  }
  std::mt19937_64 rng(opts.seed);
  Sampler sampler{opts, rng};
  Net net;
  net.seed = opts.seed;
  net.resolution = opts.resolution;
  net.points = sampler.sample(space, opts.resolution);
  sampler.check(net.points.size());
  for (Point& p : net.points) p = space.canonical(p);
  if (space.kind() == Kind::kGraph) {
    net.mesh = nearest_gap(space, net.points);
    return net;
  }
  double mesh = nearest_gap(space, net.points, 500);
  std::mt19937_64 probe_rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < opts.probes; ++i) {
    const Point x = random_point(space, probe_rng, opts.radius);
    mesh = std::max(mesh, nearest(space, net.points, x).second);
  }
  net.mesh = mesh > 0.0 ? mesh : opts.resolution;
  return net;
}

bool SubsetNet::is_cut_end(std::size_t i) const {
  return std::binary_search(cut_ends.begin(), cut_ends.end(), i);
}

std::vector<std::size_t> foot_points(const Space& space, const SubsetNet& F, const Point& q,
                                     double tol) {
  std::vector<double> d(F.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < F.size(); ++i) {
    d[i] = space.dist(q, F[i]);
    best = std::min(best, d[i]);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (d[i] <= best + tol) out.push_back(i);
  }
  return out;
}

}  // namespace qcx
