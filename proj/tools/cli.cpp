#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcx/error.hpp"
#include "qcx/net.hpp"
#include "qcx/parallel.hpp"
#include "qcx/qc_check.hpp"
#include "qcx/qgeo.hpp"
#include "qcx/report.hpp"
#include "qcx/space.hpp"
#include "qcx/space_json.hpp"
#include "qcx/spaceforms.hpp"
#include "qcx/subsets.hpp"
#include "qcx/theorems.hpp"
#include "qcx/version.hpp"
#include "qcx/zoo.hpp"

namespace qcx::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct RunConfig {
  std::string command;
  std::string target;

  std::string space_file;
  std::string scenario;
  std::string subset;
  double resolution = 0.1;
  double tol = kNaN;  // NaN: per-check default
  std::uint64_t seed = 0;
  std::size_t cap = 5000;
  double net_radius = 3.0;
  double lqc_radius = kNaN;  // NaN: scenario value or 0.6
  double proximity_mult = 3.0;
  double probe_mult = 3.0;
  double pair_scale = kNaN;
  bool local_minima = false;
  bool true_angles = false;
  int threads = 0;  // 0: all cores
  std::string out;

  double k = 0.0, s1 = 0.0, s2 = 0.0, opp = 0.0;
  std::string p, q;

  std::string from, to;
  int m = 8;
  std::string m_list = "4,8,16,32";
  bool certify = false;
  bool snap = false;

  std::string x1, x2;
  double a1 = 1.0, a2 = 1.0;
  int samples = 200;
  std::string vertex;
  double inner_mult = 2.0, outer_mult = 10.0, base_resolution = 0.05;

  int workers() const { return threads > 0 ? threads : default_threads(); }
};

json num(double x) {
  if (std::isnan(x)) return "auto";
  return x;
}

json opt_str(const std::string& s) { return s.empty() ? json(nullptr) : json(s); }

// Thread count is left out: reports must not depend on it.
json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  if (!c.target.empty()) j["target"] = c.target;
  if (c.command == "angle") {
    j["k"] = c.k;
    j["s1"] = c.s1;
    j["s2"] = c.s2;
    j["opp"] = c.opp;
    return j;
  }
  j["space"] = opt_str(c.space_file);
  j["scenario"] = opt_str(c.scenario);
  if (c.command == "dist") {
    j["p"] = c.p;
    j["q"] = c.q;
    return j;
  }
  j["subset"] = opt_str(c.subset);
  j["resolution"] = c.resolution;
  j["tol"] = num(c.tol);
  j["seed"] = c.seed;
  j["cap"] = c.cap;
  j["net_radius"] = c.net_radius;
  if (c.command == "check") {
    j["lqc_radius"] = num(c.lqc_radius);
    j["proximity_mult"] = c.proximity_mult;
    j["probe_mult"] = c.probe_mult;
    j["pair_scale"] = num(c.pair_scale);
    j["local_minima"] = c.local_minima;
    j["true_angles"] = c.true_angles;
  } else if (c.command == "qgeo" || c.command == "smtable") {
    j["from"] = c.from;
    j["to"] = c.to;
    j["snap"] = c.snap;
    if (c.command == "qgeo") {
      j["m"] = c.m;
      j["certify"] = c.certify;
    } else {
      j["m_list"] = c.m_list;
    }
  } else if (c.command == "verify") {
    j["proximity_mult"] = c.proximity_mult;
    if (c.target == "lemma44") {
      j["x1"] = c.x1;
      j["x2"] = opt_str(c.x2);
      j["a1"] = c.a1;
      j["a2"] = c.a2;
      j["samples"] = c.samples;
    }
    if (c.target == "c1vertex") {
      j["vertex"] = opt_str(c.vertex);
      j["inner_mult"] = c.inner_mult;
      j["outer_mult"] = c.outer_mult;
      j["base_resolution"] = c.base_resolution;
    }
  }
  return j;
}

struct Context {
  SpaceHandle space;
  Net ambient;
  SubsetNet subset;
  const ScenarioSpec* scenario = nullptr;
};

json read_json_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kUsage, flag + ": cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidSpec, flag + ": " + path + ": " + e.what());
  }
}

Point parse_point(const Space& space, const std::string& text, const std::string& flag) {
  if (text.empty()) throw Error(ErrorCode::kUsage, flag + " is required");
  try {
    return space.canonical(point_from_json(space, json::parse(text)));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kUsage, flag + ": " + e.what());
  }
}

// kSubsetOnly skips the ambient net; list subsets then take the resolution as mesh.
enum class Need { kSpace, kSubsetOnly, kSubset };

Context load(const RunConfig& c, Need need) {
  Context ctx;
  if (!c.scenario.empty()) {
    if (!c.space_file.empty()) {
      throw Error(ErrorCode::kUsage, "--space and --scenario are mutually exclusive");
    }
    RunOptions ro;
    ro.resolution = c.resolution;
    ro.seed = c.seed;
    ro.threads = c.workers();
    ScenarioInstance inst = build_scenario(c.scenario, ro);
    ctx.space = inst.space;
    ctx.ambient = std::move(inst.ambient);
    ctx.subset = std::move(inst.subset);
    ctx.scenario = inst.spec;
    return ctx;
  }
  if (c.space_file.empty()) throw Error(ErrorCode::kUsage, "--space or --scenario is required");
  const json doc = read_json_file(c.space_file, "--space");
  ctx.space = Space::build(spec_from_json(doc), c.workers());
  if (need == Need::kSpace) return ctx;
  if (need == Need::kSubset) {
    NetOptions no;
    no.resolution = c.resolution;
    no.seed = c.seed;
    no.cap = c.cap;
    no.radius = c.net_radius;
    ctx.ambient = build_net(*ctx.space, no);
  } else {
    ctx.ambient.mesh = c.resolution;
    ctx.ambient.resolution = c.resolution;
    ctx.ambient.seed = c.seed;
  }
  json sub;
  if (!c.subset.empty()) {
    sub = fs::exists(c.subset) ? read_json_file(c.subset, "--subset")
                               : json{{"type", "named"}, {"name", c.subset}};
  } else if (doc.contains("subset")) {
    sub = doc["subset"];
  } else {
    throw Error(ErrorCode::kUsage, "--subset is required (or a 'subset' entry in --space)");
  }
  ctx.subset = subset_from_json(*ctx.space, sub, c.resolution, ctx.ambient.mesh, c.net_radius);
  return ctx;
}

void emit_text(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::kUsage, "--out: cannot write '" + c.out + "'");
  f << text;
}

json base_document(const RunConfig& c, const Context& ctx) {
  json doc;
  doc["version"] = kVersion;
  doc["config"] = config_json(c);
  doc["space"] = ctx.space->describe();
  doc["subset"] = ctx.subset.label;
  doc["subset_size"] = ctx.subset.size();
  doc["subset_mesh"] = ctx.subset.net.mesh;
  doc["ambient"] = {{"size", ctx.ambient.points.size()}, {"mesh", ctx.ambient.mesh}};
  return doc;
}

int emit_report(const RunConfig& c, const Context& ctx, const Space& owner, const CheckReport& r,
                std::ostream& out) {
  json doc = base_document(c, ctx);
  const json rep = report_to_json(owner, r);
  for (const auto& [key, val] : rep.items()) doc[key] = val;
  emit_text(c, doc.dump(2) + "\n", out);
  if (!c.out.empty()) {
    out << r.check << ": " << verdict_name(r.verdict) << " (worst margin " << r.worst_margin
        << ")\n";
  }
  return r.verdict == Verdict::kViolation ? kExitViolation : kExitOk;
}

std::string fmt12(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

int cmd_angle(const RunConfig& c, std::ostream& out) {
  out << fmt12(comparison_angle({c.k, c.s1, c.s2, c.opp})) << "\n";
  return kExitOk;
}

int cmd_dist(const RunConfig& c, std::ostream& out) {
  const Context ctx = load(c, Need::kSpace);
  const Point p = parse_point(*ctx.space, c.p, "--p");
  const Point q = parse_point(*ctx.space, c.q, "--q");
  out << fmt12(ctx.space->dist(p, q)) << "\n";
  return kExitOk;
}

int cmd_check(RunConfig c, std::ostream& out) {
  const Context ctx = load(c, Need::kSubset);
  CheckOptions co;
  co.tol = c.tol;
  co.threads = c.workers();
  co.proximity_mult = c.proximity_mult;
  co.probe_mult = c.probe_mult;
  co.pair_scale = c.pair_scale;
  co.local_minima = c.local_minima;
  co.true_angles = c.true_angles;
  if (ctx.scenario) {
    if (std::isnan(c.pair_scale)) c.pair_scale = co.pair_scale = ctx.scenario->pair_scale;
    if (std::isnan(c.lqc_radius)) c.lqc_radius = ctx.scenario->lqc_radius;
  }
  if (std::isnan(c.lqc_radius)) c.lqc_radius = 0.6;
  const double radius = c.lqc_radius;
  const Space& s = *ctx.space;
  CheckReport r;
  if (c.target == "qc") {
    r = check_quasi_convex(s, ctx.subset, ctx.ambient, co);
  } else if (c.target == "lqc") {
    r = check_local_quasi_convex(s, ctx.subset, radius, ctx.ambient, co);
  } else if (c.target == "extremal") {
    r = check_extremal(s, ctx.subset, ctx.ambient, co);
  } else {
    r = check_locally_convex(s, ctx.subset, co);
  }
  return emit_report(c, ctx, s, r, out);
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const Context ctx = load(c, Need::kSubset);
  const Space& s = *ctx.space;
  TheoremOptions to;
  to.tol = c.tol;
  to.threads = c.workers();
  to.proximity_mult = c.proximity_mult;
  if (c.target == "c3") return emit_report(c, ctx, s, check_c3(s, ctx.subset, ctx.ambient, to), out);
  if (c.target == "prop42") {
    return emit_report(c, ctx, s, check_prop42(s, ctx.subset, ctx.ambient, to), out);
  }
  if (c.target == "lemma43") {
    return emit_report(c, ctx, s, check_lemma43(s, ctx.subset, ctx.ambient, to), out);
  }
  if (c.target == "prop22") return emit_report(c, ctx, s, check_prop22(s, ctx.subset, to), out);
  if (c.target == "lemma44") {
    Lemma44Instance inst;
    inst.space = &s;
    inst.F = ctx.subset;
    inst.x1 = parse_point(s, c.x1, "--x1");
    inst.x2 = c.x2.empty() ? inst.x1 : parse_point(s, c.x2, "--x2");
    inst.a1 = c.a1;
    inst.a2 = c.a2;
    std::mt19937_64 rng(c.seed);
    Net H;
    H.seed = c.seed;
    for (int i = 0; i < c.samples; ++i) H.points.push_back(random_point(s, rng, c.net_radius));
    return emit_report(c, ctx, s, check_lemma44(inst, H, to), out);
  }
  // c1vertex
  Point v;
  if (!c.vertex.empty()) {
    v = parse_point(s, c.vertex, "--vertex");
  } else if (ctx.scenario && ctx.scenario->vertex) {
    v = *ctx.scenario->vertex;
  } else {
    throw Error(ErrorCode::kUsage, "--vertex is required");
  }
  VertexOptions vo;
  vo.tol = c.tol;
  vo.threads = c.workers();
  vo.inner_mult = c.inner_mult;
  vo.outer_mult = c.outer_mult;
  vo.base_resolution = c.base_resolution;
  const CheckReport r = check_c1_at_vertex(s, ctx.subset, v, vo);
  const SpaceHandle base = directions_at_vertex(s, v);
  return emit_report(c, ctx, *base, r, out);
}

// Endpoint given on the command line, optionally moved to its nearest subset point.
Point endpoint(const RunConfig& c, const Context& ctx, const std::string& text,
               const std::string& flag) {
  const Point p = parse_point(*ctx.space, text, flag);
  if (!c.snap) return p;
  return ctx.subset[nearest(*ctx.space, ctx.subset.net.points, p).first];
}

json certificate(const CheckReport& r) {
  json j = {{"check", r.check}, {"verdict", verdict_name(r.verdict)}, {"tol", r.tol()}};
  j["margin"] = std::isfinite(r.worst_margin) ? json(r.worst_margin) : json(nullptr);
  return j;
}

int cmd_qgeo(const RunConfig& c, std::ostream& out) {
  const Context ctx = load(c, c.certify ? Need::kSubset : Need::kSubsetOnly);
  const Space& s = *ctx.space;
  MinimizeOptions mo;
  mo.threads = c.workers();
  const Chain chain = minimize_chain(s, ctx.subset, endpoint(c, ctx, c.from, "--from"),
                                     endpoint(c, ctx, c.to, "--to"), c.m, mo);
  const CheckReport stat = check_stationarity(s, ctx.subset, chain);
  json doc = base_document(c, ctx);
  json pts = json::array();
  for (const Point& p : chain.points) pts.push_back(point_to_json(s, p));
  doc["points"] = std::move(pts);
  doc["params"] = chain.params;
  doc["energy"] = chain.energy;
  doc["sweeps"] = chain.sweeps;
  doc["exact"] = chain.exact;
  doc["stationarity_margin"] = stat.worst_margin;
  bool violated = stat.verdict == Verdict::kViolation;
  json certs = json::array();
  if (c.certify) {
    const double tol = c.tol;
    std::vector<CheckReport> reports;
    if (s.declared_k() == 0.0) reports.push_back(check_second_difference(s, chain, ctx.ambient, tol));
    reports.push_back(check_angle_comparison(s, chain, ctx.ambient, tol));
    for (const CheckReport& r : reports) {
      certs.push_back(certificate(r));
      violated = violated || r.verdict == Verdict::kViolation;
    }
  }
  doc["certificates"] = std::move(certs);
  emit_text(c, doc.dump(2) + "\n", out);
  return violated ? kExitViolation : kExitOk;
}

std::vector<int> parse_m_list(const std::string& text) {
  std::vector<int> ms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || m < 1) {
      throw Error(ErrorCode::kUsage, "--m: '" + item + "' is not a positive integer");
    }
    ms.push_back(m);
  }
  if (ms.empty()) throw Error(ErrorCode::kUsage, "--m: empty list");
  return ms;
}

int cmd_smtable(const RunConfig& c, std::ostream& out) {
  const std::vector<int> ms = parse_m_list(c.m_list);
  const Context ctx = load(c, Need::kSubsetOnly);
  const Space& s = *ctx.space;
  MinimizeOptions mo;
  mo.threads = c.workers();
  const SmTable table = sm_convergence(s, ctx.subset, endpoint(c, ctx, c.from, "--from"),
                                       endpoint(c, ctx, c.to, "--to"), ms, mo);
  json meta = {{"version", kVersion}, {"config", config_json(c)}};
  std::ostringstream os;
  os.precision(17);
  os << "# " << meta.dump() << "\n";
  os << "m,S_m,L2,gap\n";
  for (const SmRow& row : table.rows) {
    os << row.m << ',' << row.energy << ',' << table.reference << ',' << row.gap << '\n';
  }
  emit_text(c, os.str(), out);
  return kExitOk;
}

int cmd_zoo_list(std::ostream& out) {
  for (const ScenarioSpec& s : list_scenarios()) {
    out << s.name << "\t" << s.summary << (s.unverified ? " [oracle-confirmed]" : "") << "\n";
  }
  return kExitOk;
}

int cmd_zoo_run(const RunConfig& c, std::ostream& out) {
  std::vector<std::string> names;
  if (c.target == "all") {
    for (const ScenarioSpec& s : list_scenarios()) names.push_back(s.name);
  } else {
    names.push_back(find_scenario(c.target).name);
  }
  RunOptions ro;
  ro.resolution = c.resolution;
  ro.seed = c.seed;
  ro.threads = c.workers();
  std::vector<ScenarioReport> reports;
  bool all_match = true;
  for (const std::string& n : names) {
    reports.push_back(run_scenario(n, ro));
    const ScenarioReport& r = reports.back();
    all_match = all_match && r.match;
    out << n << ": " << (r.match ? "match" : "mismatch");
    for (const FlagResult& f : r.flags) {
      if (!f.match) out << " [" << f.flag << " observed " << verdict_name(f.observed) << "]";
    }
    out << "\n";
  }
  if (!c.out.empty()) {
    const fs::path dir(c.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::kUsage, "--out: cannot create '" + c.out + "'");
    auto write = [&](const fs::path& p, const std::string& text) {
      std::ofstream f(p, std::ios::binary);
      if (!f) throw Error(ErrorCode::kUsage, "--out: cannot write '" + p.string() + "'");
      f << text;
    };
    json manifest = {{"version", kVersion}, {"config", config_json(c)}};
    json files = json::array();
    for (const ScenarioReport& r : reports) {
      write(dir / (r.name + ".json"), r.document.dump(2) + "\n");
      files.push_back({{"scenario", r.name}, {"file", r.name + ".json"},
                       {"status", r.match ? "match" : "mismatch"}});
    }
    manifest["reports"] = std::move(files);
    manifest["summary"] = "summary.csv";
    manifest["status"] = all_match ? "match" : "mismatch";
    write(dir / "summary.csv", summary_csv(reports));
    write(dir / "manifest.json", manifest.dump(2) + "\n");
  }
  return all_match ? kExitOk : kExitViolation;
}

void add_threads(CLI::App* app, RunConfig& c) {
  app->add_option("--threads", c.threads, "Worker threads (default: all cores)")
      ->check(CLI::PositiveNumber);
}

void add_source(CLI::App* app, RunConfig& c) {
  app->add_option("--space", c.space_file, "Space-spec JSON file");
  app->add_option("--scenario", c.scenario, "Zoo scenario supplying space and subset");
}

void add_sampling(CLI::App* app, RunConfig& c) {
  add_source(app, c);
  app->add_option("--subset", c.subset, "Named subset or subset JSON file");
  app->add_option("--resolution", c.resolution, "Net resolution")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--tol", c.tol, "Violation tolerance (default: per check)")
      ->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
  app->add_option("--cap", c.cap, "Ambient net point cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--net-radius", c.net_radius, "Sampled extent of non-compact factors")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--out", c.out, "Output file");
  add_threads(app, c);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Quasi-convex and extremal subset checks in comparison geometry", "qcx"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* angle = app.add_subcommand("angle", "Model comparison angle between sides s1 and s2");
  angle->add_option("--k", c.k, "Curvature")->required();
  angle->add_option("--s1", c.s1, "First side")->required();
  angle->add_option("--s2", c.s2, "Second side")->required();
  angle->add_option("--opp", c.opp, "Opposite side")->required();

  auto* dist = app.add_subcommand("dist", "Distance between two points");
  add_source(dist, c);
  dist->add_option("--p", c.p, "First point (JSON)")->required();
  dist->add_option("--q", c.q, "Second point (JSON)")->required();
  add_threads(dist, c);

  auto* check = app.add_subcommand("check", "Sampled subset checks");
  check->add_option("kind", c.target, "qc | lqc | extremal | convex")
      ->required()
      ->check(CLI::IsMember({"qc", "lqc", "extremal", "convex"}));
  add_sampling(check, c);
  check->add_option("--lqc-radius", c.lqc_radius, "Ball radius of the local test")
      ->check(CLI::PositiveNumber);
  check->add_option("--proximity-mult", c.proximity_mult, "Skip q within this many meshes of F")
      ->check(CLI::PositiveNumber);
  check->add_option("--probe-mult", c.probe_mult, "Extremal probe scale in meshes")
      ->check(CLI::PositiveNumber);
  check->add_option("--pair-scale", c.pair_scale, "Midpoint test pair scale")
      ->check(CLI::PositiveNumber);
  check->add_flag("--local-minima", c.local_minima, "Use net-local minima as feet");
  check->add_flag("--true-angles", c.true_angles, "Measure true angles along geodesics");

  auto* qgeo = app.add_subcommand("qgeo", "Minimise a chain in the subset and certify it");
  add_sampling(qgeo, c);
  qgeo->add_option("--from", c.from, "Start point (JSON)")->required();
  qgeo->add_option("--to", c.to, "End point (JSON)")->required();
  qgeo->add_option("--m", c.m, "Chain segments")->check(CLI::PositiveNumber)->capture_default_str();
  qgeo->add_flag("--snap", c.snap, "Move endpoints to their nearest subset points");
  qgeo->add_flag("--certify", c.certify, "Run the curvature comparison certificates");

  auto* sm = app.add_subcommand("smtable", "Chain energy against squared length");
  add_sampling(sm, c);
  sm->add_option("--from", c.from, "Start point (JSON)")->required();
  sm->add_option("--to", c.to, "End point (JSON)")->required();
  sm->add_flag("--snap", c.snap, "Move endpoints to their nearest subset points");
  sm->add_option("--m", c.m_list, "Comma-separated increasing segment counts")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Curvature-1 theorem checks");
  verify->add_option("which", c.target, "c3 | prop42 | lemma43 | lemma44 | prop22 | c1vertex")
      ->required()
      ->check(CLI::IsMember({"c3", "prop42", "lemma43", "lemma44", "prop22", "c1vertex"}));
  add_sampling(verify, c);
  verify->add_option("--proximity-mult", c.proximity_mult, "Proximity cutoff in meshes")
      ->check(CLI::PositiveNumber);
  verify->add_option("--x1", c.x1, "lemma44: first centre (JSON)");
  verify->add_option("--x2", c.x2, "lemma44: second centre (JSON, default x1)");
  verify->add_option("--a1", c.a1, "lemma44: first weight")->check(CLI::NonNegativeNumber);
  verify->add_option("--a2", c.a2, "lemma44: second weight")->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", c.samples, "lemma44: random test points")
      ->check(CLI::PositiveNumber);
  verify->add_option("--vertex", c.vertex, "c1vertex: cone apex or suspension pole (JSON)");
  verify->add_option("--inner-mult", c.inner_mult, "c1vertex: annulus inner radius in meshes")
      ->check(CLI::PositiveNumber);
  verify->add_option("--outer-mult", c.outer_mult, "c1vertex: annulus outer radius in meshes")
      ->check(CLI::PositiveNumber);
  verify->add_option("--base-resolution", c.base_resolution, "c1vertex: base net resolution")
      ->check(CLI::PositiveNumber);

  auto* zoo = app.add_subcommand("zoo", "Example scenarios");
  zoo->require_subcommand(1);
  auto* zoo_list = zoo->add_subcommand("list", "List scenarios");
  auto* zoo_run = zoo->add_subcommand("run", "Run scenarios against their expected flags");
  zoo_run->add_option("name", c.target, "Scenario name or 'all'")->required();
  zoo_run->add_option("--resolution", c.resolution, "Subset resolution")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  zoo_run->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
  zoo_run->add_option("--out", c.out, "Output directory");
  add_threads(zoo_run, c);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*angle) {
      c.command = "angle";
      return cmd_angle(c, out);
    }
    if (*dist) {
      c.command = "dist";
      return cmd_dist(c, out);
    }
    if (*check) {
      c.command = "check";
      return cmd_check(c, out);
    }
    if (*qgeo) {
      c.command = "qgeo";
      return cmd_qgeo(c, out);
    }
    if (*sm) {
      c.command = "smtable";
      return cmd_smtable(c, out);
    }
    if (*verify) {
      c.command = "verify";
      return cmd_verify(c, out);
    }
    if (*zoo_list) {
      c.command = "zoo list";
      return cmd_zoo_list(out);
    }
    c.command = "zoo run";
    return cmd_zoo_run(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace qcx::cli
