#include "qcx/space_json.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "qcx/error.hpp"

namespace qcx {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kInvalidSpec, what); }

SpaceSpec constructor_from_json(const json& c) {
  if (!c.is_object() || !c.contains("type") || !c["type"].is_string()) {
    bad("constructor node needs a string field 'type'");
  }
  const std::string type = c["type"];
  SpaceSpec s;
  if (type == "Sphere") {
    if (!c.contains("dim")) bad("Sphere needs 'dim'");
    const double d = number_from_json(c["dim"], "Sphere.dim");
    if (d != std::floor(d)) bad("Sphere.dim must be an integer");
    s = SpaceSpec::sphere(static_cast<int>(d));
  } else if (type == "Circle") {
    if (!c.contains("perimeter")) bad("Circle needs 'perimeter'");
    s = SpaceSpec::circle(number_from_json(c["perimeter"], "Circle.perimeter"));
  } else if (type == "Line") {
    s = SpaceSpec::line();
  } else if (type == "HalfLine") {
    s = SpaceSpec::half_line();
  } else if (type == "Product" || type == "Join") {
    if (!c.contains("factors") || !c["factors"].is_array() || c["factors"].size() != 2) {
      bad(type + " needs 'factors' with two entries");
    }
    SpaceSpec a = constructor_from_json(c["factors"][0]);
    SpaceSpec b = constructor_from_json(c["factors"][1]);
    s = type == "Product" ? SpaceSpec::product(std::move(a), std::move(b))
                          : SpaceSpec::join(std::move(a), std::move(b));
  } else if (type == "Cone" || type == "Suspension") {
    if (!c.contains("base")) bad(type + " needs 'base'");
    SpaceSpec b = constructor_from_json(c["base"]);
    s = type == "Cone" ? SpaceSpec::cone(std::move(b)) : SpaceSpec::suspension(std::move(b));
  } else if (type == "Graph") {
    s.kind = Kind::kGraph;
  } else {
    bad("unknown constructor type '" + type + "'");
  }
  if (c.contains("k")) s.k = number_from_json(c["k"], "k");
  return s;
}

json constructor_to_json(const SpaceSpec& s, bool top) {
  json c;
  c["type"] = kind_name(s.kind);
  switch (s.kind) {
    case Kind::kSphere: c["dim"] = s.dim; break;
    case Kind::kCircle: c["perimeter"] = s.perimeter; break;
    case Kind::kProduct:
    case Kind::kJoin:
      c["factors"] = json::array(
          {constructor_to_json(s.children[0], false), constructor_to_json(s.children[1], false)});
      break;
    case Kind::kCone:
    case Kind::kSuspension: c["base"] = constructor_to_json(s.children[0], false); break;
    default: break;
  }
  if (!top && s.k) c["k"] = *s.k;
  return c;
}

}  // namespace

double number_from_json(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || errno == ERANGE) {
      bad(std::string("field '") + what + "' is not a decimal number: '" + s + "'");
    }
    return v;
  }
  bad(std::string("field '") + what + "' must be a number");
}

SpaceSpec spec_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("constructor")) bad("space document needs 'constructor'");
  SpaceSpec s = constructor_from_json(doc["constructor"]);
  if (doc.contains("k")) s.k = number_from_json(doc["k"], "k");
  if (s.kind == Kind::kGraph) {
    if (!doc.contains("graph")) bad("Graph constructor needs a 'graph' payload");
    const json& g = doc["graph"];
    if (!g.contains("nodes") || !g["nodes"].is_array()) bad("graph payload needs 'nodes'");
    if (!g.contains("edges") || !g["edges"].is_array()) bad("graph payload needs 'edges'");
    GraphData data;
    std::unordered_map<std::string, int> index;
    for (const json& n : g["nodes"]) {
      std::string id = n.is_string() ? n.get<std::string>() : n.dump();
      index.emplace(id, static_cast<int>(data.ids.size()));
      data.ids.push_back(std::move(id));
    }
    for (const json& e : g["edges"]) {
      if (!e.is_array() || e.size() != 3) bad("graph edge must be [u, v, weight]");
      auto lookup = [&](const json& n) {
        const std::string id = n.is_string() ? n.get<std::string>() : n.dump();
        auto it = index.find(id);
        if (it == index.end()) bad("graph edge references unknown node '" + id + "'");
        return it->second;
      };
      data.edges.push_back({lookup(e[0]), lookup(e[1]), number_from_json(e[2], "edge weight")});
    }
    s.graph = std::make_shared<const GraphData>(std::move(data));
  }
  return s;
}

json spec_to_json(const SpaceSpec& spec) {
  json doc;
  doc["constructor"] = constructor_to_json(spec, true);
  if (spec.k) doc["k"] = *spec.k;
  if (spec.kind == Kind::kGraph && spec.graph) {
    json nodes = json::array();
    for (const auto& id : spec.graph->ids) nodes.push_back(id);
    json edges = json::array();
    for (const auto& e : spec.graph->edges) {
      edges.push_back(json::array({spec.graph->ids[e.u], spec.graph->ids[e.v], e.w}));
    }
    doc["graph"] = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  }
  return doc;
}

Point point_from_json(const Space& space, const json& j) {
  Point p;
  switch (space.kind()) {
    case Kind::kSphere: {
      if (!j.is_array()) bad("sphere point must be an array");
      std::vector<double> v;
      for (const json& c : j) v.push_back(number_from_json(c, "sphere coordinate"));
      double n = 0.0;
      for (double c : v) n += c * c;
      n = std::sqrt(n);
      if (n > 0.0 && std::abs(n - 1.0) <= 1e-9) {
        for (double& c : v) c /= n;
      }
      p = sphere_point(std::move(v));
      break;
    }
    case Kind::kCircle: p = circle_point(number_from_json(j, "circle parameter")); break;
    case Kind::kLine: p = line_point(number_from_json(j, "line parameter")); break;
    case Kind::kHalfLine: p = half_line_point(number_from_json(j, "half-line parameter")); break;
    case Kind::kProduct:
      if (!j.is_array() || j.size() != 2) bad("product point must be [a, b]");
      p = product_point(point_from_json(*space.child(0), j[0]),
                        point_from_json(*space.child(1), j[1]));
      break;
    case Kind::kCone:
    case Kind::kSuspension: {
      if (!j.is_object() || !j.contains("t")) bad("cone/suspension point needs 't'");
      const double t = number_from_json(j["t"], "t");
      Point base = j.contains("base") ? point_from_json(*space.child(0), j["base"])
                                      : space.child(0)->origin();
      p = space.kind() == Kind::kCone ? cone_point(t, std::move(base))
                                      : suspension_point(t, std::move(base));
      break;
    }
    case Kind::kJoin: {
      if (!j.is_object() || !j.contains("t")) bad("join point needs 't'");
      const double t = number_from_json(j["t"], "t");
      Point a = j.contains("p1") ? point_from_json(*space.child(0), j["p1"])
                                 : space.child(0)->origin();
      Point b = j.contains("p2") ? point_from_json(*space.child(1), j["p2"])
                                 : space.child(1)->origin();
      p = join_point(t, std::move(a), std::move(b));
      break;
    }
    case Kind::kGraph:
      if (j.is_number_integer()) {
        p = graph_point(j.get<int>());
      } else if (j.is_string()) {
        p = graph_point(space.node_index(j.get<std::string>()));
      } else {
        bad("graph point must be a node id");
      }
      break;
  }
  space.validate(p);
  return space.canonical(p);
}

json point_to_json(const Space& space, const Point& p) {
  switch (space.kind()) {
    case Kind::kSphere: return json(p.v);
    case Kind::kCircle:
    case Kind::kLine:
    case Kind::kHalfLine: return json(p.t);
    case Kind::kProduct:
      return json::array(
          {point_to_json(*space.child(0), p.sub[0]), point_to_json(*space.child(1), p.sub[1])});
    case Kind::kCone:
    case Kind::kSuspension: return json{{"t", p.t}, {"base", point_to_json(*space.child(0), p.sub[0])}};
    case Kind::kJoin:
      return json{{"t", p.t},
                  {"p1", point_to_json(*space.child(0), p.sub[0])},
                  {"p2", point_to_json(*space.child(1), p.sub[1])}};
    case Kind::kGraph: return json(space.node_ids().at(static_cast<std::size_t>(p.node)));
  }
  return json();
}

}  // namespace qcx
