#include "qcx/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>

#include "qcx/error.hpp"
#include "qcx/glued.hpp"
#include "qcx/space_json.hpp"
#include "qcx/subsets.hpp"
#include "qcx/theorems.hpp"
#include "qcx/version.hpp"

namespace qcx {
namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

constexpr Verdict kOk = Verdict::kNoViolation;
constexpr Verdict kBad = Verdict::kViolation;

Point sph(double x, double y, double z) { return sphere_point({x, y, z}); }

// Rotation of Sphere(2) about the z axis.
Point rotate_z(const Point& p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return sphere_point({c * p.v[0] - s * p.v[1], s * p.v[0] + c * p.v[1], p.v[2]});
}

std::vector<ScenarioSpec> build_catalog() {
  std::vector<ScenarioSpec> cat;

  {
    ScenarioSpec s;
    s.name = "helix-in-cylinder";
    s.summary = "helix of pitch 1 in the flat cylinder Circle(2pi) x Line";
    s.anchor = "cylindrical spiral in a cylinder: locally convex, not quasi-convex";
    s.space = [] { return SpaceSpec::product(SpaceSpec::circle(2 * kPi), SpaceSpec::line()); };
    s.subset = [](const ScenarioContext& c) {
      return subset_helix(c.space, 1.0, c.resolution, c.radius);
    };
    s.expected = {{"quasi_convex", kBad, "a spiral in a cylinder is not quasi-convex"},
                  {"locally_convex", kOk, "a spiral is a geodesic of the flat cylinder"}};
    s.net_radius = 1.5;
    cat.push_back(std::move(s));
  }
  {
    ScenarioSpec s;
    s.name = "antipodal-pair-on-sphere";
    s.summary = "two antipodal points of Sphere(2)";
    s.anchor = "a pair of antipodal points is quasi-convex";
    s.space = [] { return SpaceSpec::sphere(2); };
    s.subset = [](const ScenarioContext& c) {
      return subset_list(c.space, {sph(0, 0, 1), sph(0, 0, -1)}, "antipodal-pair",
                         c.ambient.mesh);
    };
    s.expected = {{"quasi_convex", kOk, "a pair of antipodal points is quasi-convex"}};
    s.theorems = {"c3", "prop42", "lemma43"};
    cat.push_back(std::move(s));
  }
  {
    ScenarioSpec s;
    s.name = "isolated-points-non-qc";
    s.summary = "two points of Sphere(2) at distance 2";
    s.anchor = "isolated points are locally quasi-convex but need not be quasi-convex";
    s.space = [] { return SpaceSpec::sphere(2); };
    s.subset = [](const ScenarioContext& c) {
      return subset_list(c.space, {sph(1, 0, 0), sph(std::cos(2.0), std::sin(2.0), 0)},
                         "isolated-pair", c.ambient.mesh);
    };
    s.expected = {{"quasi_convex", kBad, "a non-antipodal pair is not quasi-convex"},
                  {"locally_quasi_convex", kOk, "isolated points are locally quasi-convex"}};
    s.lqc_radius = 1.0;
    cat.push_back(std::move(s));
  }
  {
    ScenarioSpec s;
    s.name = "barrel-rim";
    s.summary = "rim of a disc glued to a flat cylinder wall (graph model)";
    s.anchor = "the gluing circle of a disc and a cylinder wall";
    s.space = [] { return SpaceSpec::graph_of(barrel_graph(), 0.0); };
    s.subset = [](const ScenarioContext& c) { return subset_prefix(c.space, "rim:"); };
    s.expected = {{"locally_quasi_convex", kBad,
                   "the gluing circle of a disc and a cylinder is not locally quasi-convex"}};
    s.fixed_mesh = true;
    cat.push_back(std::move(s));
  }
  {
    ScenarioSpec s;
    s.name = "capped-cylinder-rim";
    s.summary = "gluing circle of a solid cylinder and a solid cone (graph model)";
    s.anchor = "gluing circle: quasi-convex, neither locally convex nor extremal";
    s.space = [] { return SpaceSpec::graph_of(capped_cylinder_graph(), 0.0); };
    s.subset = [](const ScenarioContext& c) { return subset_prefix(c.space, "rim:"); };
    s.expected = {{"quasi_convex", kOk, "the gluing circle is quasi-convex"},
                  {"locally_convex", kBad, "the gluing circle is not locally convex"},
                  {"extremal", kBad, "the gluing circle is not extremal"}};
    s.pair_scale = 1.5;
    s.fixed_mesh = true;
    cat.push_back(std::move(s));
  }
  {
    ScenarioSpec s;
    s.name = "cone-over-pair";
    s.summary = "two rays over an antipodal pair of Cone(Circle(3pi/2))";
    s.anchor = "the cone over a quasi-convex subset is quasi-convex";
    s.space = [] { return SpaceSpec::cone(SpaceSpec::circle(1.5 * kPi)); };
    s.subset = [](const ScenarioContext& c) {
      return subset_rays(c.space, {circle_point(0.0), circle_point(0.75 * kPi)}, c.resolution,
                         c.radius);
    };
    s.expected = {{"quasi_convex", kOk, "the cone over a quasi-convex subset is quasi-convex"}};
    s.theorems = {"c1vertex"};
    s.vertex = cone_point(0.0, circle_point(0.0));
    s.net_radius = 2.0;
    cat.push_back(std::move(s));
  }
  {
    ScenarioSpec s;
    s.name = "join-factor";
    s.summary = "antipodal pair of the first factor of Circle(3pi/2) * Circle(3pi/2)";
    s.anchor = "a quasi-convex subset of a join factor is quasi-convex in the join";
    s.space = [] {
      return SpaceSpec::join(SpaceSpec::circle(1.5 * kPi), SpaceSpec::circle(1.5 * kPi));
    };
    s.subset = [](const ScenarioContext& c) {
      return subset_join_factor(c.space, {circle_point(0.0), circle_point(0.75 * kPi)},
                                c.ambient.mesh);
    };
    s.expected = {{"quasi_convex", kOk, "a quasi-convex factor subset stays quasi-convex"}};
    s.theorems = {"c3", "prop42", "lemma43"};
    s.ambient_mult = 1.5;
    cat.push_back(std::move(s));
  }
  {
    ScenarioSpec s;
    s.name = "join-product-failure";
    s.summary = "F1 * F2 for antipodal pairs of both factors of Circle(3pi/2) * Circle(3pi/2)";
    s.anchor = "the join of quasi-convex subsets need not be quasi-convex";
    s.space = [] {
      return SpaceSpec::join(SpaceSpec::circle(1.5 * kPi), SpaceSpec::circle(1.5 * kPi));
    };
    s.subset = [](const ScenarioContext& c) {
      const std::vector<Point> pair = {circle_point(0.0), circle_point(0.75 * kPi)};
      return subset_join_of(c.space, pair, pair, c.resolution);
    };
    s.expected = {{"quasi_convex", kBad, "F1 * F2 is not quasi-convex in general"}};
    s.ambient_mult = 1.5;
    cat.push_back(std::move(s));
  }
  {
    ScenarioSpec s;
    s.name = "antipodal-longitudes";
    s.summary = "two antipodal longitudes of Suspension(Circle(pi))";
    s.anchor = "a union of two antipodal longitudes is quasi-convex";
    s.space = [] { return SpaceSpec::suspension(SpaceSpec::circle(kPi)); };
    s.subset = [](const ScenarioContext& c) {
      return subset_meridians(c.space, {circle_point(0.0), circle_point(0.5 * kPi)},
                              c.resolution);
    };
    s.expected = {{"quasi_convex", kOk, "a union of two antipodal longitudes is quasi-convex"},
                  {"locally_convex", kBad, "base diameter below pi: not locally convex"},
                  {"extremal", kBad, "two antipodal longitudes are not extremal"}};
    s.theorems = {"c3", "prop42", "lemma43", "prop22", "c1vertex"};
    s.vertex = suspension_point(0.0, circle_point(0.0));
    cat.push_back(std::move(s));
  }
  for (const auto& [suffix, L, verdict] :
       {std::tuple{"pi", kPi, kOk}, std::tuple{"3pi2", 1.5 * kPi, kBad}}) {
    ScenarioSpec s;
    s.name = std::string("poles-extremal-iff-") + suffix;
    s.summary = std::string("poles of Suspension(Circle(") + suffix + "))";
    s.anchor = "suspension poles are extremal iff the base has diameter at most pi/2";
    const double len = L;
    s.space = [len] { return SpaceSpec::suspension(SpaceSpec::circle(len)); };
    s.subset = [](const ScenarioContext& c) { return subset_poles(c.space, c.ambient.mesh); };
    s.expected = {{"extremal", verdict,
                   verdict == kOk ? "base diameter pi/2: the poles are extremal"
                                  : "base diameter above pi/2: the poles are not extremal"}};
    s.theorems = {"c3", "prop42", "lemma43", "prop22"};
    cat.push_back(std::move(s));
  }
  {
    ScenarioSpec s;
    s.name = "rotation-fixed-set";
    s.summary = "fixed points of the rotation of Sphere(2) by 2pi/3 about the z axis";
    s.anchor = "the fixed point set of an isometry group is quasi-convex";
    s.space = [] { return SpaceSpec::sphere(2); };
    s.subset = [](const ScenarioContext& c) {
      std::vector<Point> fixed;
      for (const Point& p : c.ambient.points) {
        if (c.space.dist(p, rotate_z(p, 2 * kPi / 3)) <= 1e-12) fixed.push_back(p);
      }
      return subset_list(c.space, std::move(fixed), "fixed-set", c.ambient.mesh);
    };
    s.expected = {{"quasi_convex", kOk, "a nonempty fixed point set is quasi-convex"}};
    s.theorems = {"c3", "prop42", "lemma43"};
    cat.push_back(std::move(s));
  }
  {
    ScenarioSpec s;
    s.name = "disc-boundary-extremal";
    s.summary = "boundary circle of the flat unit disc (graph model)";
    s.anchor = "the boundary of an Alexandrov space is extremal";
    s.space = [] { return SpaceSpec::graph_of(disc_graph(), 0.0); };
    s.subset = [](const ScenarioContext& c) { return subset_prefix(c.space, "rim:"); };
    s.expected = {{"extremal", kOk, "the boundary is an extremal subset"}};
    s.fixed_mesh = true;
    cat.push_back(std::move(s));
  }
  {
    ScenarioSpec s;
    s.name = "equator-sphere";
    s.summary = "equator of Sphere(2)";
    s.anchor = "a great circle is totally geodesic; a Riemannian manifold has no proper "
               "extremal subsets";
    s.space = [] { return SpaceSpec::sphere(2); };
    s.subset = [](const ScenarioContext& c) { return subset_equator(c.space, c.resolution); };
    s.expected = {{"locally_convex", kOk, "a great circle is totally geodesic"},
                  {"quasi_convex", kOk, "a great circle is convex"},
                  {"locally_quasi_convex", kOk, "a great circle is convex"},
                  {"extremal", kBad, "a Riemannian manifold has no proper extremal subsets"}};
    s.theorems = {"c3", "prop42", "lemma43", "lemma44"};
    cat.push_back(std::move(s));
  }
  {
    ScenarioSpec s;
    s.name = "half-equator-arc";
    s.summary = "closed half of the equator of Sphere(2)";
    s.anchor = "a locally convex subset with boundary need not be locally quasi-convex";
    s.space = [] { return SpaceSpec::sphere(2); };
    s.subset = [](const ScenarioContext& c) {
      return subset_equator_arc(c.space, 0.0, kPi, c.resolution);
    };
    s.expected = {{"locally_convex", kOk, "a geodesic arc is locally convex"},
                  {"locally_quasi_convex", kBad,
                   "beyond an endpoint the foot angle is pi (oracle-confirmed)"}};
    s.unverified = true;
    cat.push_back(std::move(s));
  }
  return cat;
}

std::string opt_verdict(const std::optional<Verdict>& v) { return v ? verdict_name(*v) : ""; }

json flag_json(const FlagResult& f) {
  json j;
  j["flag"] = f.flag;
  j["expected"] = opt_verdict(f.expected);
  j["observed"] = verdict_name(f.observed);
  j["margin"] = f.margin;
  j["tol"] = f.tol;
  j["match"] = f.match;
  j["anchor"] = f.anchor;
  return j;
}

std::string theorem_anchor(const std::string& t) {
  if (t == "c3") return "every point is within pi/2 of a quasi-convex subset";
  if (t == "prop42") return "local minima of the distance to F are within pi/2";
  if (t == "lemma43") return "|qp| + |qp'| <= pi with the equality dichotomy";
  if (t == "lemma44") return "weighted cosine sums vanish on F and transfer their sign";
  if (t == "prop22") return "a quasi-convex subset through a pole is a union of meridians";
  return "the directions of F at a vertex form a quasi-convex subset";
}

}  // namespace

const std::vector<ScenarioSpec>& list_scenarios() {
  static const std::vector<ScenarioSpec> catalog = build_catalog();
  return catalog;
}

const ScenarioSpec& find_scenario(const std::string& name) {
  for (const ScenarioSpec& s : list_scenarios()) {
    if (s.name == name) return s;
  }
  throw Error(ErrorCode::kUnknownScenario, "no scenario named '" + name + "'");
}

bool verdict_matches(Verdict expected, Verdict observed) {
  if (expected == Verdict::kViolation) return observed == Verdict::kViolation;
  return observed != Verdict::kViolation;
}

ScenarioInstance build_scenario(const std::string& name, const RunOptions& opts) {
  const ScenarioSpec& spec = find_scenario(name);
  if (!(opts.resolution > 0.0)) throw Error(ErrorCode::kUsage, "resolution must be positive");
  ScenarioInstance inst;
  inst.spec = &spec;
  inst.space = Space::build(spec.space(), opts.threads);
  NetOptions no;
  no.resolution = opts.resolution * spec.ambient_mult;
  no.seed = opts.seed;
  no.cap = spec.cap;
  no.radius = spec.net_radius;
  inst.ambient = build_net(*inst.space, no);
  const ScenarioContext ctx{*inst.space, inst.ambient, opts.resolution * spec.subset_mult,
                            spec.net_radius};
  inst.subset = spec.subset(ctx);
  return inst;
}

ScenarioReport run_scenario(const std::string& name, const RunOptions& opts) {
  const ScenarioInstance inst = build_scenario(name, opts);
  const ScenarioSpec& spec = *inst.spec;
  const SpaceHandle& space = inst.space;
  const Net& Q = inst.ambient;
  const SubsetNet& F = inst.subset;

  CheckOptions co;
  co.threads = opts.threads;
  co.pair_scale = spec.pair_scale;
  const Classification cls = classify(*space, F, Q, spec.lqc_radius, co);

  ScenarioReport rep;
  rep.name = spec.name;
  rep.space = space->describe();
  rep.subset = F.label;
  rep.subset_size = F.size();
  rep.ambient_size = Q.points.size();
  rep.subset_mesh = F.net.mesh;
  rep.ambient_mesh = Q.mesh;
  rep.options = opts;
  rep.implications_hold = cls.implications_hold;
  rep.implication_note = cls.implication_note;
  rep.checks = {cls.locally_convex, cls.extremal, cls.quasi_convex, cls.locally_quasi_convex};
  const std::vector<std::string> flag_names = {"locally_convex", "extremal", "quasi_convex",
                                               "locally_quasi_convex"};
  std::vector<SpaceHandle> owners(4, space);

  const bool qc_ok = cls.quasi_convex.verdict != Verdict::kViolation;
  std::vector<std::string> theorem_flags;
  for (const std::string& t : spec.theorems) {
    TheoremOptions to;
    to.threads = opts.threads;
    if (t == "c1vertex") {
      VertexOptions vo;
      vo.threads = opts.threads;
      rep.checks.push_back(check_c1_at_vertex(*space, F, *spec.vertex, vo));
      owners.push_back(directions_at_vertex(*space, *spec.vertex));
    } else {
      if (space->declared_k() != 1.0 || !qc_ok) continue;
      if (t == "c3") {
        rep.checks.push_back(check_c3(*space, F, Q, to));
      } else if (t == "prop42") {
        rep.checks.push_back(check_prop42(*space, F, Q, to));
      } else if (t == "lemma43") {
        rep.checks.push_back(check_lemma43(*space, F, Q, to));
      } else if (t == "prop22") {
        rep.checks.push_back(check_prop22(*space, F, to));
      } else if (t == "lemma44") {
        Lemma44Instance l44;
        l44.space = space.get();
        l44.F = F;
        l44.x1 = sph(0, 0, 1);
        l44.x2 = sph(0, 0, 1);
        std::mt19937_64 rng(opts.seed);
        Net H;
        H.seed = opts.seed;
        for (int i = 0; i < 200; ++i) H.points.push_back(random_point(*space, rng));
        rep.checks.push_back(check_lemma44(l44, H, to));
      } else {
        throw Error(ErrorCode::kInvalidSpec, "unknown theorem check '" + t + "'");
      }
      owners.push_back(space);
    }
    theorem_flags.push_back(t);
  }

  std::vector<std::string> all_flags = flag_names;
  all_flags.insert(all_flags.end(), theorem_flags.begin(), theorem_flags.end());
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    FlagResult f;
    f.flag = all_flags[i];
    f.observed = rep.checks[i].verdict;
    f.margin = rep.checks[i].worst_margin;
    f.tol = rep.checks[i].tol();
    if (i >= flag_names.size()) {
      f.expected = kOk;
      f.anchor = theorem_anchor(f.flag);
    }
    for (const ExpectedFlag& e : spec.expected) {
      if (e.flag == f.flag) {
        f.expected = e.verdict;
        f.anchor = e.anchor;
      }
    }
    if (f.expected) f.match = verdict_matches(*f.expected, f.observed);
    rep.match = rep.match && f.match;
    rep.flags.push_back(std::move(f));
  }

  json doc;
  doc["version"] = kVersion;
  doc["config"] = {{"command", "zoo run"},
                   {"scenario", spec.name},
                   {"resolution", opts.resolution},
                   {"seed", opts.seed}};
  doc["scenario"] = {{"name", spec.name},
                     {"summary", spec.summary},
                     {"anchor", spec.anchor},
                     {"unverified_expectation", spec.unverified},
                     {"fixed_mesh", spec.fixed_mesh}};
  doc["space"] = {{"description", rep.space}, {"declared_k", space->declared_k()}};
  doc["subset"] = {{"label", F.label}, {"size", F.size()}, {"mesh", F.net.mesh}};
  doc["ambient"] = {{"size", Q.points.size()},
                    {"mesh", Q.mesh},
                    {"resolution", Q.resolution},
                    {"seed", Q.seed}};
  json checks = json::array();
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    json c = report_to_json(*owners[i], rep.checks[i]);
    c["flag"] = all_flags[i];
    checks.push_back(std::move(c));
  }
  doc["checks"] = std::move(checks);
  json flags = json::array();
  for (const FlagResult& f : rep.flags) flags.push_back(flag_json(f));
  doc["flags"] = std::move(flags);
  doc["implications"] = {{"hold", rep.implications_hold}, {"note", rep.implication_note}};
  doc["status"] = rep.match ? "match" : "mismatch";
  rep.document = std::move(doc);
  return rep;
}

std::string summary_csv(const std::vector<ScenarioReport>& reports) {
  std::ostringstream os;
  os.precision(17);
  os << "scenario,flag,expected,observed,margin\n";
  for (const ScenarioReport& r : reports) {
    for (const FlagResult& f : r.flags) {
      os << r.name << ',' << f.flag << ',' << opt_verdict(f.expected) << ','
         << verdict_name(f.observed) << ',' << f.margin << '\n';
    }
  }
  return os.str();
}

}  // namespace qcx
