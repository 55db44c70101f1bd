#include "qcx/subsets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcx/error.hpp"
#include "qcx/space_json.hpp"

namespace qcx {
namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

std::size_t steps(double length, double res) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(length / res - 1e-12)));
}

std::vector<Point> dedupe(const Space& space, std::vector<Point> pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (Point& p : pts) {
    Point c = space.canonical(p);
    space.validate(c);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

void mark_cut_ends(const Space& space, SubsetNet& F, const std::vector<Point>& ends) {
  for (const Point& e : ends) {
    const Point c = space.canonical(e);
    const auto it = std::find(F.net.points.begin(), F.net.points.end(), c);
    if (it != F.net.points.end()) {
      F.cut_ends.push_back(static_cast<std::size_t>(it - F.net.points.begin()));
    }
  }
  std::sort(F.cut_ends.begin(), F.cut_ends.end());
  F.cut_ends.erase(std::unique(F.cut_ends.begin(), F.cut_ends.end()), F.cut_ends.end());
}

std::vector<Point> base_points(const Space& base, const json& arr) {
  require(arr.is_array(), ErrorCode::kInvalidSpec, "expected an array of base points");
  std::vector<Point> out;
  for (const json& j : arr) out.push_back(point_from_json(base, j));
  return out;
}

}  // namespace

SubsetNet subset_list(const Space& space, std::vector<Point> points, std::string label,
                      double ambient_mesh) {
  SubsetNet F;
  F.net.points = dedupe(space, std::move(points));
  F.net.mesh = ambient_mesh;
  F.label = std::move(label);
  F.discrete = true;
  return F;
}

SubsetNet subset_sampled(const Space& space, std::vector<Point> points, std::string label) {
  SubsetNet F;
  F.net.points = dedupe(space, std::move(points));
  F.net.mesh = nearest_gap(space, F.net.points);
  F.label = std::move(label);
  return F;
}

SubsetNet subset_poles(const Space& space, double ambient_mesh) {
  std::vector<Point> pts;
  if (space.kind() == Kind::kSuspension) {
    pts = {suspension_point(0.0, space.child(0)->origin()),
           suspension_point(kPi, space.child(0)->origin())};
  } else if (space.kind() == Kind::kSphere) {
    const std::size_t n = static_cast<std::size_t>(space.spec().dim) + 1;
    std::vector<double> north(n, 0.0);
    std::vector<double> south(n, 0.0);
    north[n - 1] = 1.0;
    south[n - 1] = -1.0;
    pts = {sphere_point(north), sphere_point(south)};
  } else {
    throw Error(ErrorCode::kWrongConstructor, "poles need a sphere or a suspension");
  }
  return subset_list(space, std::move(pts), "poles", ambient_mesh);
}

SubsetNet subset_equator(const Space& space, double resolution) {
  std::vector<Point> pts;
  if (space.kind() == Kind::kSphere && space.spec().dim == 2) {
    const std::size_t n = steps(2.0 * kPi, resolution);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
      pts.push_back(sphere_point({std::cos(a), std::sin(a), 0.0}));
    }
  } else if (space.kind() == Kind::kSuspension) {
    NetOptions o;
    o.resolution = resolution;
    for (Point& b : build_net(*space.child(0), o).points) {
      pts.push_back(suspension_point(kHalfPi, std::move(b)));
    }
  } else {
    throw Error(ErrorCode::kWrongConstructor, "equator needs Sphere(2) or a suspension");
  }
  return subset_sampled(space, std::move(pts), "equator");
}

SubsetNet subset_equator_arc(const Space& space, double from, double to, double resolution) {
  require(space.kind() == Kind::kSphere && space.spec().dim == 2, ErrorCode::kWrongConstructor,
          "equator arc needs Sphere(2)");
  require(to > from, ErrorCode::kInvalidSpec, "arc needs to > from");
  const std::size_t n = steps(to - from, resolution);
  std::vector<Point> pts;
  for (std::size_t i = 0; i <= n; ++i) {
    const double a = from + (to - from) * static_cast<double>(i) / static_cast<double>(n);
    pts.push_back(sphere_point({std::cos(a), std::sin(a), 0.0}));
  }
  return subset_sampled(space, std::move(pts), "arc");
}

SubsetNet subset_helix(const Space& space, double pitch, double resolution, double radius) {
  require(space.kind() == Kind::kProduct && space.child(0)->kind() == Kind::kCircle &&
              space.child(1)->kind() == Kind::kLine,
          ErrorCode::kWrongConstructor, "helix needs Circle x Line");
  require(pitch > 0.0, ErrorCode::kInvalidSpec, "helix pitch must be > 0");
  const double L = space.child(0)->spec().perimeter;
  const double smax = radius * L / pitch;
  const double speed = std::hypot(1.0, pitch / L);
  const std::size_t n = steps(2.0 * smax * speed, resolution);
  std::vector<Point> pts;
  for (std::size_t i = 0; i <= n; ++i) {
    const double s = -smax + 2.0 * smax * static_cast<double>(i) / static_cast<double>(n);
    pts.push_back(product_point(circle_point(s), line_point(pitch * s / L)));
  }
  const std::vector<Point> ends = {pts.front(), pts.back()};
  SubsetNet F = subset_sampled(space, std::move(pts), "helix");
  mark_cut_ends(space, F, ends);
  return F;
}

SubsetNet subset_prefix(const Space& space, const std::string& prefix) {
  require(space.kind() == Kind::kGraph, ErrorCode::kWrongConstructor,
          "node-prefix subsets need a graph space");
  std::vector<Point> pts;
  const auto& ids = space.node_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i].rfind(prefix, 0) == 0) pts.push_back(graph_point(static_cast<int>(i)));
  }
  require(!pts.empty(), ErrorCode::kInvalidSpec, "no graph node id starts with '" + prefix + "'");
  return subset_sampled(space, std::move(pts), prefix);
}

SubsetNet subset_meridians(const Space& space, const std::vector<Point>& base,
                           double resolution) {
  require(space.kind() == Kind::kSuspension, ErrorCode::kWrongConstructor,
          "meridians need a suspension");
  const std::size_t n = std::max<std::size_t>(2, steps(kPi, resolution));
  std::vector<Point> pts = {suspension_point(0.0, space.child(0)->origin())};
  for (const Point& b : base) {
    for (std::size_t j = 1; j < n; ++j) {
      pts.push_back(suspension_point(kPi * static_cast<double>(j) / static_cast<double>(n), b));
    }
  }
  pts.push_back(suspension_point(kPi, space.child(0)->origin()));
  return subset_sampled(space, std::move(pts), "meridians");
}

SubsetNet subset_rays(const Space& space, const std::vector<Point>& base, double resolution,
                      double radius) {
  require(space.kind() == Kind::kCone, ErrorCode::kWrongConstructor, "rays need a cone");
  const std::size_t n = steps(radius, resolution);
  std::vector<Point> pts = {space.origin()};
  std::vector<Point> ends;
  for (const Point& b : base) {
    for (std::size_t j = 1; j <= n; ++j) {
      pts.push_back(cone_point(radius * static_cast<double>(j) / static_cast<double>(n), b));
    }
    ends.push_back(pts.back());
  }
  SubsetNet F = subset_sampled(space, std::move(pts), "rays");
  mark_cut_ends(space, F, ends);
  return F;
}

SubsetNet subset_join_of(const Space& space, const std::vector<Point>& first,
                         const std::vector<Point>& second, double resolution) {
  require(space.kind() == Kind::kJoin, ErrorCode::kWrongConstructor, "join subsets need a join");
  const std::size_t n = std::max<std::size_t>(2, steps(kHalfPi, resolution));
  std::vector<Point> pts;
  for (const Point& a : first) {
    for (const Point& b : second) {
      for (std::size_t j = 0; j <= n; ++j) {
        pts.push_back(join_point(kHalfPi * static_cast<double>(j) / static_cast<double>(n), a, b));
      }
    }
  }
  return subset_sampled(space, std::move(pts), "join");
}

SubsetNet subset_join_factor(const Space& space, const std::vector<Point>& first,
                             double ambient_mesh) {
  require(space.kind() == Kind::kJoin, ErrorCode::kWrongConstructor, "join subsets need a join");
  std::vector<Point> pts;
  for (const Point& a : first) pts.push_back(join_point(0.0, a, space.child(1)->origin()));
  return subset_list(space, std::move(pts), "factor", ambient_mesh);
}

SubsetNet subset_from_json(const Space& space, const json& doc, double resolution,
                           double ambient_mesh, double radius) {
  require(doc.is_object() && doc.contains("type"), ErrorCode::kInvalidSpec,
          "subset document needs 'type'");
  const std::string type = doc["type"];
  if (type == "list") {
    require(doc.contains("points") && doc["points"].is_array(), ErrorCode::kInvalidSpec,
            "list subset needs 'points'");
    std::vector<Point> pts;
    for (const json& j : doc["points"]) pts.push_back(point_from_json(space, j));
    return subset_list(space, std::move(pts), doc.value("label", std::string("list")),
                       ambient_mesh);
  }
  require(type == "named" && doc.contains("name"), ErrorCode::kInvalidSpec,
          "subset type must be 'list' or 'named' with a 'name'");
  const std::string name = doc["name"];
  auto num = [&](const char* key, double fallback) {
    return doc.contains(key) ? number_from_json(doc[key], key) : fallback;
  };
  if (name == "poles") return subset_poles(space, ambient_mesh);
  if (name == "equator") return subset_equator(space, resolution);
  if (name == "arc") return subset_equator_arc(space, num("from", 0.0), num("to", kPi), resolution);
  if (name == "helix") return subset_helix(space, num("pitch", 1.0), resolution, radius);
  if (name == "rim") return subset_prefix(space, doc.value("prefix", std::string("rim")));
  if (name == "longitudes") {
    require(space.kind() == Kind::kSuspension && space.child(0)->kind() == Kind::kCircle,
            ErrorCode::kWrongConstructor, "longitudes need a suspension over a circle");
    const double L = space.child(0)->spec().perimeter;
    return subset_meridians(space, {circle_point(0.0), circle_point(num("angle", 0.5 * L))},
                            resolution);
  }
  if (name == "meridians") {
    require(space.kind() == Kind::kSuspension, ErrorCode::kWrongConstructor,
            "meridians need a suspension");
    return subset_meridians(space, base_points(*space.child(0), doc.value("points", json::array())),
                            resolution);
  }
  if (name == "coneover") {
    require(space.kind() == Kind::kCone, ErrorCode::kWrongConstructor, "coneover needs a cone");
    return subset_rays(space, base_points(*space.child(0), doc.value("points", json::array())),
                       resolution, radius);
  }
  if (name == "joinof") {
    require(space.kind() == Kind::kJoin, ErrorCode::kWrongConstructor, "joinof needs a join");
    return subset_join_of(space, base_points(*space.child(0), doc.value("first", json::array())),
                          base_points(*space.child(1), doc.value("second", json::array())),
                          resolution);
  }
  if (name == "factor") {
    require(space.kind() == Kind::kJoin, ErrorCode::kWrongConstructor, "factor needs a join");
    return subset_join_factor(
        space, base_points(*space.child(0), doc.value("points", json::array())), ambient_mesh);
  }
  throw Error(ErrorCode::kInvalidSpec, "unknown named subset '" + name + "'");
}

}  // namespace qcx
