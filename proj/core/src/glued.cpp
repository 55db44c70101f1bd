#include "qcx/glued.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace qcx {
namespace {

constexpr double kPi = std::numbers::pi;

using Vec3 = std::array<double, 3>;

double euclid(const Vec3& a, const Vec3& b) {
  return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) +
                   (a[2] - b[2]) * (a[2] - b[2]));
}

void add_rim(GraphData& g, std::vector<Vec3>& pos, int n) {
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * kPi * i / n;
    g.ids.push_back("rim:" + std::to_string(i));
    pos.push_back({std::cos(a), std::sin(a), 0.0});
  }
}

void complete(GraphData& g, const std::vector<Vec3>& pos) {
  const int n = static_cast<int>(pos.size());
  g.edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, euclid(pos[i], pos[j])});
  }
}

}  // namespace

GraphData barrel_graph(const BarrelParams& p) {
  GraphData g;
  std::vector<Vec3> pos;
  std::vector<double> angle, height;
  add_rim(g, pos, p.rim_nodes);
  for (int i = 0; i < p.rim_nodes; ++i) {
    angle.push_back(2.0 * kPi * i / p.rim_nodes);
    height.push_back(0.0);
  }
  for (int row = 1; row <= p.wall_rows; ++row) {
    for (int i = 0; i < p.rim_nodes; ++i) {
      const double a = 2.0 * kPi * i / p.rim_nodes;
      g.ids.push_back("wall:" + std::to_string(row) + ":" + std::to_string(i));
      pos.push_back({std::cos(a), std::sin(a), row * p.wall_step});
      angle.push_back(a);
      height.push_back(row * p.wall_step);
    }
  }
  const int wall_end = static_cast<int>(pos.size());
  const int m = static_cast<int>(std::floor(1.0 / p.disc_step)) + 2;
  for (int i = -m; i <= m; ++i) {
    for (int j = -m; j <= m; ++j) {
      const double x = i * p.disc_step, y = j * p.disc_step;
      if (std::hypot(x, y) < 1.0 - 0.5 * p.disc_step) {
        g.ids.push_back("disc:" + std::to_string(i) + ":" + std::to_string(j));
        pos.push_back({x, y, 0.0});
      }
    }
  }
  const int n = static_cast<int>(pos.size());
  // Wall: flat unrolled distance on the cylinder.
  for (int a = 0; a < wall_end; ++a) {
    for (int b = a + 1; b < wall_end; ++b) {
      double ds = std::abs(angle[a] - angle[b]);
      ds = std::min(ds, 2.0 * kPi - ds);
      const double d = std::hypot(ds, height[a] - height[b]);
      if (d <= p.wall_reach) g.edges.push_back({a, b, d});
    }
  }
  // Disc: Euclidean, rim nodes included.
  auto in_disc = [&](int i) { return i < p.rim_nodes || i >= wall_end; };
  for (int a = 0; a < n; ++a) {
    if (!in_disc(a)) continue;
    for (int b = a + 1; b < n; ++b) {
      if (!in_disc(b)) continue;
      const bool rim_pair = a < p.rim_nodes && b < p.rim_nodes;
      const double d = euclid(pos[a], pos[b]);
      if (rim_pair || d <= p.disc_reach) g.edges.push_back({a, b, d});
    }
  }
  return g;
}

GraphData capped_cylinder_graph(const CappedCylinderParams& p) {
  GraphData g;
  std::vector<Vec3> pos;
  add_rim(g, pos, p.rim_nodes);
  const int m = static_cast<int>(std::ceil(std::max(1.2, p.height + 0.2) / p.step)) + 2;
  const int mz = static_cast<int>(std::ceil((p.height + p.cone_height) / p.step)) + 2;
  for (int i = -m; i <= m; ++i) {
    for (int j = -m; j <= m; ++j) {
      for (int l = -mz; l <= mz; ++l) {
        const double x = i * p.step, y = j * p.step, z = (l + 0.5) * p.step;
        const double r = std::hypot(x, y);
        const bool in_cyl = z >= 0.0 && z <= p.height && r <= 1.0 - 0.3 * p.step;
        const bool in_cone =
            z < 0.0 && z >= -p.cone_height && r <= (1.0 + z / p.cone_height) - 0.3 * p.step;
        if (in_cyl || in_cone) {
          g.ids.push_back("body:" + std::to_string(i) + ":" + std::to_string(j) + ":" +
                          std::to_string(l));
          pos.push_back({x, y, z});
        }
      }
    }
  }
  complete(g, pos);
  return g;
}

GraphData disc_graph(const DiscParams& p) {
  GraphData g;
  std::vector<Vec3> pos;
  add_rim(g, pos, p.rim_nodes);
  const int m = static_cast<int>(std::floor(1.0 / p.step)) + 2;
  for (int i = -m; i <= m; ++i) {
    for (int j = -m; j <= m; ++j) {
      const double x = i * p.step, y = j * p.step;
      if (std::hypot(x, y) <= 1.0 - 0.5 * p.step) {
        g.ids.push_back("disc:" + std::to_string(i) + ":" + std::to_string(j));
        pos.push_back({x, y, 0.0});
      }
    }
  }
  complete(g, pos);
  return g;
}

}  // namespace qcx
