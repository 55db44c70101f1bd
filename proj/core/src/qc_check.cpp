#include "qcx/qc_check.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "qcx/error.hpp"
#include "qcx/parallel.hpp"
#include "qcx/spaceforms.hpp"

namespace qcx {
namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Distances shared by the checks: Q x F and F x F.
struct Tables {
  std::size_t nq = 0;
  std::size_t nf = 0;
  std::vector<double> qf;
  std::vector<double> ff;
  std::vector<double> qF;  // dist(q, F)
  const Net* Q = nullptr;

  const Point& qpoint(std::size_t q) const { return Q->points[q]; }

  double QF(std::size_t q, std::size_t f) const { return qf[q * nf + f]; }
  double FF(std::size_t a, std::size_t b) const { return ff[a * nf + b]; }
};

Tables make_tables(const Space& space, const SubsetNet& F, const Net& Q, int threads) {
  Tables t;
  t.Q = &Q;
  t.nq = Q.points.size();
  t.nf = F.size();
  t.qf.assign(t.nq * t.nf, 0.0);
  t.ff.assign(t.nf * t.nf, 0.0);
  t.qF.assign(t.nq, std::numeric_limits<double>::infinity());
  parallel_for(t.nq, threads, [&](std::size_t q) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < t.nf; ++f) {
      const double d = space.dist(Q.points[q], F[f]);
      t.qf[q * t.nf + f] = d;
      best = std::min(best, d);
    }
    t.qF[q] = best;
  });
  parallel_for(t.nf, threads, [&](std::size_t a) {
    for (std::size_t b = 0; b < t.nf; ++b) {
      t.ff[a * t.nf + b] = a == b ? 0.0 : space.dist(F[a], F[b]);
    }
  });
  return t;
}

double mesh_eff(const SubsetNet& F, const Net& Q) { return std::max(F.net.mesh, Q.mesh); }

// Feet of q: global minimizers, or net-local minima when requested.
std::vector<std::size_t> feet_of(const Tables& t, std::size_t q, const SubsetNet& F,
                                 const CheckOptions& opts) {
  std::vector<std::size_t> out;
  if (!opts.local_minima) {
    for (std::size_t f = 0; f < t.nf; ++f) {
      if (t.QF(q, f) <= t.qF[q] + opts.foot_tol) out.push_back(f);
    }
    return out;
  }
  const double nb = 3.0 * F.net.mesh;
  for (std::size_t f = 0; f < t.nf; ++f) {
    bool local = true;
    for (std::size_t g = 0; g < t.nf && local; ++g) {
      if (g != f && t.FF(f, g) <= nb && t.QF(q, g) < t.QF(q, f) - opts.foot_tol) local = false;
    }
    if (local) out.push_back(f);
  }
  return out;
}

bool touches_cut_end(const SubsetNet& F, const std::vector<std::size_t>& feet) {
  return std::any_of(feet.begin(), feet.end(), [&](std::size_t f) { return F.is_cut_end(f); });
}

struct Triple {
  double margin = kNegInf;
  std::size_t q = 0, p = 0, r = 0, x = 0;
  double dqp = 0, dpr = 0, dqr = 0, angle = 0, slack = 0;
};

void keep(Triple& best, const Triple& cand) {
  if (cand.margin > best.margin) best = cand;
}

Triple angle_triple(const Space& space, const Tables& t, const SubsetNet& F, std::size_t q,
                    std::size_t p, std::size_t r, const CheckOptions& opts) {
  Triple c;
  c.q = q;
  c.p = p;
  c.r = r;
  c.dqp = t.QF(q, p);
  c.dpr = t.FF(p, r);
  c.dqr = t.QF(q, r);
  c.angle = opts.true_angles ? true_angle(space, F[p], t.qpoint(q), F[r], opts.true_angle_eps)
                             : comparison_angle_clamped(space.declared_k(), c.dqp, c.dpr, c.dqr);
  c.slack = opts.slack_mult * F.net.mesh / c.dqp;
  c.margin = c.angle - kHalfPi - c.slack;
  return c;
}

void add_common(CheckReport& r, const SubsetNet& F, const Net& Q) {
  r.params.emplace_back("resolution", Q.resolution);
  r.params.emplace_back("seed", static_cast<double>(Q.seed));
  r.params.emplace_back("mesh_subset", F.net.mesh);
  r.params.emplace_back("mesh_ambient", Q.mesh);
}

void set_triple_witness(CheckReport& r, const SubsetNet& F, const Net& Q, const Triple& b) {
  Witness w;
  w.points = {{"q", Q.points[b.q]}, {"p", F[b.p]}, {"r", F[b.r]}};
  w.values = {{"dqp", b.dqp}, {"dpr", b.dpr}, {"dqr", b.dqr}, {"angle", b.angle},
              {"slack", b.slack}};
  r.witness = std::move(w);
}

CheckReport qc_impl(const Space& space, const SubsetNet& F, const Net& Q, const Tables& t,
                    const CheckOptions& opts) {
  CheckReport r;
  r.check = opts.local_minima ? "qc-local-minima" : opts.true_angles ? "qc-true-angle" : "qc";
  const double tol = std::isnan(opts.tol) ? 1e-6 : opts.tol;
  const double cutoff = opts.proximity_mult * mesh_eff(F, Q);
  r.params = {{"tol", tol}};
  add_common(r, F, Q);
  r.params.emplace_back("cutoff", cutoff);
  r.params.emplace_back("slack_mult", opts.slack_mult);
  if (F.size() <= 1) {
    finalize(r, 0);
    return r;
  }
  std::vector<Triple> per_q(t.nq);
  std::vector<std::uint64_t> triples(t.nq, 0);
  std::vector<char> used(t.nq, 0), cut(t.nq, 0);
  parallel_for(t.nq, opts.threads, [&](std::size_t q) {
    if (t.qF[q] <= cutoff) return;
    const auto feet = feet_of(t, q, F, opts);
    if (touches_cut_end(F, feet)) {
      cut[q] = 1;
      return;
    }
    used[q] = 1;
    for (std::size_t p : feet) {
      if (t.QF(q, p) <= 0.0) continue;
      for (std::size_t rr = 0; rr < t.nf; ++rr) {
        if (rr == p) continue;
        keep(per_q[q], angle_triple(space, t, F, q, p, rr, opts));
        ++triples[q];
      }
    }
  });
  Triple best;
  std::uint64_t queries = 0, cut_queries = 0, total = 0;
  for (std::size_t q = 0; q < t.nq; ++q) {
    queries += used[q];
    cut_queries += cut[q];
    total += triples[q];
    keep(best, per_q[q]);
  }
  r.counts = {{"queries", queries}, {"cut_queries", cut_queries}, {"triples", total}};
  r.worst_margin = best.margin;
  if (total > 0) set_triple_witness(r, F, Q, best);
  finalize(r, total);
  return r;
}

CheckReport lqc_impl(const Space& space, const SubsetNet& F, double radius, const Net& Q,
                     const Tables& t, const CheckOptions& opts) {
  CheckReport r;
  r.check = "lqc";
  const double tol = std::isnan(opts.tol) ? 1e-6 : opts.tol;
  const double cutoff = opts.proximity_mult * mesh_eff(F, Q);
  r.params = {{"tol", tol}};
  add_common(r, F, Q);
  r.params.emplace_back("radius", radius);
  r.params.emplace_back("cutoff", cutoff);
  r.params.emplace_back("slack_mult", opts.slack_mult);
  if (F.size() <= 1) {
    finalize(r, 0);
    return r;
  }
  if (!(radius > 2.0 * F.net.mesh)) {
    std::ostringstream os;
    os << "radius " << radius << " must exceed twice the subset mesh " << F.net.mesh;
    throw Error(ErrorCode::kRadiusTooSmall, os.str());
  }
  std::vector<std::vector<std::size_t>> feet(t.nq);
  std::uint64_t cut_queries = 0;
  for (std::size_t q = 0; q < t.nq; ++q) {
    if (t.qF[q] <= cutoff) continue;
    feet[q] = feet_of(t, q, F, opts);
    if (touches_cut_end(F, feet[q])) {
      feet[q].clear();
      ++cut_queries;
    }
  }
  std::vector<Triple> per_x(t.nf);
  std::vector<std::uint64_t> triples(t.nf, 0);
  std::vector<char> live(t.nf, 0);
  parallel_for(t.nf, opts.threads, [&](std::size_t x) {
    std::vector<std::size_t> ball;
    for (std::size_t f = 0; f < t.nf; ++f) {
      if (t.FF(x, f) < radius) ball.push_back(f);
    }
    if (ball.size() < 2) return;
    live[x] = 1;
    for (std::size_t q = 0; q < t.nq; ++q) {
      if (feet[q].empty() || t.QF(q, x) >= radius) continue;
      for (std::size_t p : feet[q]) {
        if (t.FF(x, p) >= radius || t.QF(q, p) <= 0.0) continue;
        for (std::size_t rr : ball) {
          if (rr == p) continue;
          Triple c = angle_triple(space, t, F, q, p, rr, opts);
          c.x = x;
          keep(per_x[x], c);
          ++triples[x];
        }
      }
    }
  });
  Triple best;
  std::uint64_t centers = 0, total = 0;
  for (std::size_t x = 0; x < t.nf; ++x) {
    centers += live[x];
    total += triples[x];
    keep(best, per_x[x]);
  }
  r.counts = {{"centers", centers},
              {"vacuous_centers", t.nf - centers},
              {"cut_queries", cut_queries},
              {"triples", total}};
  r.worst_margin = best.margin;
  if (total > 0) {
    set_triple_witness(r, F, Q, best);
    r.witness->points.emplace_back("x", F[best.x]);
  }
  finalize(r, total);
  return r;
}

CheckReport extremal_impl(const Space& space, const SubsetNet& F, const Net& Q, const Tables& t,
                          const CheckOptions& opts) {
  CheckReport r;
  r.check = "extremal";
  const double tol = std::isnan(opts.tol) ? 1e-6 : opts.tol;
  const double mesh = mesh_eff(F, Q);
  const double h = opts.probe_mult * mesh;
  const double tol_slope = opts.slope_c * mesh / h;
  const double cutoff = opts.extremal_cutoff_mult * mesh;
  r.params = {{"tol", tol}};
  add_common(r, F, Q);
  r.params.emplace_back("probe_scale", h);
  r.params.emplace_back("tol_slope", tol_slope);
  r.params.emplace_back("cutoff", cutoff);
  if (F.size() == 0) {
    finalize(r, 0);
    return r;
  }
  // Ambient probes around each subset point.
  std::vector<std::vector<std::size_t>> near(t.nf);
  for (std::size_t x = 0; x < t.nq; ++x) {
    for (std::size_t f = 0; f < t.nf; ++f) {
      const double d = t.QF(x, f);
      if (d > 0.0 && d <= h) near[f].push_back(x);
    }
  }
  struct Probe {
    double margin = kNegInf;
    std::size_t q = 0, p = 0, x = 0;
    double dpq = 0, dxq = 0, dpx = 0, slope = 0;
  };
  std::vector<Probe> per_q(t.nq);
  std::vector<std::uint64_t> probes(t.nq, 0);
  std::vector<char> used(t.nq, 0), cut(t.nq, 0);
  parallel_for(t.nq, opts.threads, [&](std::size_t q) {
    if (t.qF[q] <= cutoff) return;
    const auto feet = feet_of(t, q, F, opts);
    if (touches_cut_end(F, feet)) {
      cut[q] = 1;
      return;
    }
    used[q] = 1;
    for (std::size_t p : feet) {
      for (std::size_t x : near[p]) {
        Probe c;
        c.q = q;
        c.p = p;
        c.x = x;
        c.dpq = t.QF(q, p);
        c.dpx = t.QF(x, p);
        c.dxq = space.dist(Q.points[x], Q.points[q]);
        c.slope = (c.dxq - c.dpq) / c.dpx;
        c.margin = c.slope - tol_slope;
        if (c.margin > per_q[q].margin) per_q[q] = c;
        ++probes[q];
      }
    }
  });
  Probe best;
  std::uint64_t queries = 0, cut_queries = 0, total = 0;
  for (std::size_t q = 0; q < t.nq; ++q) {
    queries += used[q];
    cut_queries += cut[q];
    total += probes[q];
    if (per_q[q].margin > best.margin) best = per_q[q];
  }
  r.counts = {{"queries", queries}, {"cut_queries", cut_queries}, {"probes", total}};
  r.worst_margin = best.margin;
  if (total > 0) {
    Witness w;
    w.points = {{"q", Q.points[best.q]}, {"p", F[best.p]}, {"x", Q.points[best.x]}};
    w.values = {{"dpq", best.dpq}, {"dxq", best.dxq}, {"dpx", best.dpx}, {"slope", best.slope}};
    r.witness = std::move(w);
  }
  finalize(r, total);
  return r;
}

CheckReport convex_impl(const Space& space, const SubsetNet& F, const Tables* t,
                        const CheckOptions& opts) {
  CheckReport r;
  r.check = "convex";
  const double mesh = F.net.mesh;
  const double tol = std::isnan(opts.tol) ? 0.75 * mesh : opts.tol;
  const double scale = std::isnan(opts.pair_scale) ? 4.0 * mesh : opts.pair_scale;
  r.params = {{"tol", tol}, {"mesh_subset", mesh}, {"pair_scale", scale}};
  const std::size_t n = F.size();
  if (n <= 1) {
    finalize(r, 0);
    return r;
  }
  auto dff = [&](std::size_t a, std::size_t b) {
    return t ? t->FF(a, b) : space.dist(F[a], F[b]);
  };
  struct Mid {
    double margin = kNegInf;
    std::size_t a = 0, b = 0;
    Point m;
    double dab = 0;
  };
  std::vector<Mid> per_a(n);
  std::vector<std::uint64_t> pairs(n, 0);
  parallel_for(n, opts.threads, [&](std::size_t a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double d = dff(a, b);
      if (!(d > 0.0 && d <= scale)) continue;
      std::vector<Point> mids;
      try {
        mids = space.geodesic_points(F[a], F[b], 0.5);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kAmbiguousGeodesic) throw;
        std::ostringstream os;
        os << "subset pair (" << a << ", " << b << ") at distance " << d << ": " << e.what();
        throw Error(ErrorCode::kAmbiguousGeodesic, os.str());
      }
      // Every minimal geodesic has to stay close to F.
      ++pairs[a];
      for (Point& m : mids) {
        const double gap = nearest(space, F.net.points, m).second;
        if (gap > per_a[a].margin) per_a[a] = Mid{gap, a, b, std::move(m), d};
      }
    }
  });
  Mid best;
  std::uint64_t total = 0;
  for (std::size_t a = 0; a < n; ++a) {
    total += pairs[a];
    if (per_a[a].margin > best.margin) best = per_a[a];
  }
  r.counts = {{"pairs", total}};
  r.worst_margin = best.margin;
  if (total > 0) {
    Witness w;
    w.points = {{"p", F[best.a]}, {"r", F[best.b]}, {"m", best.m}};
    w.values = {{"dpr", best.dab}, {"dmF", best.margin}};
    r.witness = std::move(w);
  }
  finalize(r, total);
  return r;
}

}  // namespace

double true_angle(const Space& space, const Point& p, const Point& q, const Point& r, double eps) {
  const double dq = space.dist(p, q), dr = space.dist(p, r);
  if (dq <= 0.0 || dr <= 0.0) return 0.0;
  const double e = std::min({eps, 0.5 * dq, 0.5 * dr});
  std::vector<Point> as, bs;
  try {
    as = space.geodesic_points(p, q, e / dq);
    bs = space.geodesic_points(p, r, e / dr);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kAmbiguousGeodesic) throw;
    return 0.0;
  }
  // Smallest angle over the available pairs of directions.
  double best = std::numbers::pi;
  for (const Point& a : as) {
    for (const Point& b : bs) {
      best = std::min(best, comparison_angle_clamped(space.declared_k(), e, e, space.dist(a, b)));
    }
  }
  return best;
}

CheckReport check_quasi_convex(const Space& space, const SubsetNet& F, const Net& Q,
                               const CheckOptions& opts) {
  const Tables t = make_tables(space, F, Q, opts.threads);
  return qc_impl(space, F, Q, t, opts);
}

CheckReport check_local_quasi_convex(const Space& space, const SubsetNet& F, double radius,
                                     const Net& Q, const CheckOptions& opts) {
  const Tables t = make_tables(space, F, Q, opts.threads);
  return lqc_impl(space, F, radius, Q, t, opts);
}

CheckReport check_extremal(const Space& space, const SubsetNet& F, const Net& Q,
                           const CheckOptions& opts) {
  const Tables t = make_tables(space, F, Q, opts.threads);
  return extremal_impl(space, F, Q, t, opts);
}

CheckReport check_locally_convex(const Space& space, const SubsetNet& F,
                                 const CheckOptions& opts) {
  return convex_impl(space, F, nullptr, opts);
}

Classification classify(const Space& space, const SubsetNet& F, const Net& Q, double radius,
                        const CheckOptions& opts) {
  const Tables t = make_tables(space, F, Q, opts.threads);
  Classification c;
  CheckOptions shared = opts;
  shared.tol = std::numeric_limits<double>::quiet_NaN();
  c.locally_convex = convex_impl(space, F, &t, shared);
  c.extremal = extremal_impl(space, F, Q, t, shared);
  c.quasi_convex = qc_impl(space, F, Q, t, shared);
  c.locally_quasi_convex = lqc_impl(space, F, radius, Q, t, shared);
  const auto passes = [](const CheckReport& r) { return r.verdict != Verdict::kViolation; };
  if (passes(c.extremal) && !passes(c.quasi_convex)) {
    c.implications_hold = false;
    c.implication_note = "extremal passed but quasi-convex failed";
  }
  if (passes(c.quasi_convex) && !passes(c.locally_quasi_convex)) {
    c.implications_hold = false;
    c.implication_note += std::string(c.implication_note.empty() ? "" : "; ") +
                          "quasi-convex passed but locally quasi-convex failed";
  }
  return c;
}

}  // namespace qcx
