#include "qcx/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "qcx/error.hpp"
#include "qcx/parallel.hpp"
#include "qcx/spaceforms.hpp"
#include "qcx/subsets.hpp"

namespace qcx {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * kPi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_k1(const Space& space) {
  if (space.declared_k() != 1.0) {
    std::ostringstream os;
    os << "check needs declared k = 1, got " << space.declared_k();
    throw Error(ErrorCode::kWrongCurvature, os.str());
  }
}

struct Resolved {
  double tol;
  double band;
};

Resolved resolve(const TheoremOptions& opts, const SubsetNet& F, bool quadratic = false) {
  Resolved r;
  r.tol = std::isnan(opts.tol) ? 2.0 * F.net.mesh : opts.tol;
  r.band = !std::isnan(opts.band) ? opts.band
           : quadratic            ? r.tol * r.tol * r.tol / 16.0
                                  : 0.25 * r.tol;
  return r;
}

// Row-major |Q| x |F| distances.
std::vector<double> qf_table(const Space& space, const SubsetNet& F, const Net& Q, int threads) {
  const std::size_t nf = F.size();
  std::vector<double> t(Q.points.size() * nf);
  parallel_for(Q.points.size(), threads, [&](std::size_t q) {
    for (std::size_t f = 0; f < nf; ++f) t[q * nf + f] = space.dist(Q.points[q], F[f]);
  });
  return t;
}

std::vector<double> ff_table(const Space& space, const SubsetNet& F, int threads) {
  const std::size_t nf = F.size();
  std::vector<double> t(nf * nf, 0.0);
  parallel_for(nf, threads, [&](std::size_t a) {
    for (std::size_t b = 0; b < nf; ++b) t[a * nf + b] = a == b ? 0.0 : space.dist(F[a], F[b]);
  });
  return t;
}

double rigidity_over(const double* row, std::size_t n) {
  double m = 0.0;
  for (std::size_t f = 0; f < n; ++f) m = std::max(m, std::abs(row[f] - kHalfPi));
  return m;
}

void base_params(CheckReport& r, const Resolved& rs, const SubsetNet& F, const Net& Q) {
  r.params = {{"tol", rs.tol},
              {"band", rs.band},
              {"mesh_subset", F.net.mesh},
              {"mesh_ambient", Q.mesh},
              {"resolution", Q.resolution},
              {"seed", static_cast<double>(Q.seed)}};
}

struct Best {
  double margin = kNegInf;
  std::size_t q = 0, p = 0, r = 0;
  double a = 0, b = 0;
};

void keep(Best& best, const Best& c) {
  if (c.margin > best.margin) best = c;
}

bool near_pole(double t) { return t <= 1e-12 || t >= kPi - 1e-12; }

}  // namespace

CheckReport check_c3(const Space& space, const SubsetNet& F, const Net& Q,
                     const TheoremOptions& opts) {
  require_k1(space);
  const Resolved rs = resolve(opts, F);
  CheckReport r;
  r.check = "c3";
  base_params(r, rs, F, Q);
  const std::size_t nf = F.size(), nq = Q.points.size();
  if (nf == 0 || nq == 0) {
    finalize(r, 0);
    return r;
  }
  const auto t = qf_table(space, F, Q, opts.threads);
  std::vector<Best> per_q(nq);
  std::vector<char> in_band(nq, 0);
  parallel_for(nq, opts.threads, [&](std::size_t q) {
    const double* row = &t[q * nf];
    const auto it = std::min_element(row, row + nf);
    const double d = *it;
    Best c{d - kHalfPi, q, static_cast<std::size_t>(it - row), 0, d - kHalfPi, kNegInf};
    if (d >= kHalfPi - rs.band) {
      in_band[q] = 1;
      c.b = rigidity_over(row, nf);
      c.margin = std::max(c.margin, c.b);
    }
    per_q[q] = c;
  });
  Best best;
  double c3 = kNegInf, rig = kNegInf;
  std::uint64_t band = 0;
  for (std::size_t q = 0; q < nq; ++q) {
    keep(best, per_q[q]);
    c3 = std::max(c3, per_q[q].a);
    rig = std::max(rig, per_q[q].b);
    band += in_band[q];
  }
  r.worst_margin = best.margin;
  r.extras = {{"c3_margin", c3}, {"rigidity_margin", rig}};
  r.counts = {{"queries", nq}, {"band", band}};
  Witness w;
  w.points = {{"q", Q.points[best.q]}, {"p", F[best.p]}};
  w.values = {{"dqF", best.a + kHalfPi}, {"rigidity", best.b}};
  r.witness = std::move(w);
  finalize(r, nq);
  return r;
}

CheckReport check_prop42(const Space& space, const SubsetNet& F, const Net& Q,
                         const TheoremOptions& opts) {
  require_k1(space);
  const Resolved rs = resolve(opts, F);
  CheckReport r;
  r.check = "prop42";
  base_params(r, rs, F, Q);
  const double nb = opts.local_mult * F.net.mesh;
  r.params.emplace_back("neighbourhood", nb);
  r.params.emplace_back("rigidity_radius", opts.rigidity_radius);
  const std::size_t nf = F.size(), nq = Q.points.size();
  if (nf == 0 || nq == 0) {
    finalize(r, 0);
    return r;
  }
  const auto t = qf_table(space, F, Q, opts.threads);
  const auto ff = ff_table(space, F, opts.threads);
  std::vector<char> isolated(nf, 1);
  std::vector<std::vector<std::size_t>> near(nf), ball(nf);
  for (std::size_t a = 0; a < nf; ++a) {
    for (std::size_t b = 0; b < nf; ++b) {
      if (b == a) continue;
      const double d = ff[a * nf + b];
      if (d <= nb) {
        near[a].push_back(b);
        isolated[a] = 0;
      }
      if (d <= opts.rigidity_radius) ball[a].push_back(b);
    }
  }
  std::vector<Best> per_q(nq);
  std::vector<std::uint64_t> minima(nq, 0), band(nq, 0);
  parallel_for(nq, opts.threads, [&](std::size_t q) {
    const double* row = &t[q * nf];
    for (std::size_t f = 0; f < nf; ++f) {
      if (isolated[f]) continue;
      bool local = true;
      for (std::size_t g : near[f]) {
        if (row[g] < row[f] - opts.foot_tol) {
          local = false;
          break;
        }
      }
      if (!local) continue;
      ++minima[q];
      Best c{row[f] - kHalfPi, q, f, 0, row[f] - kHalfPi, kNegInf};
      if (row[f] >= kHalfPi - rs.band) {
        ++band[q];
        double m = std::abs(row[f] - kHalfPi);
        for (std::size_t g : ball[f]) m = std::max(m, std::abs(row[g] - kHalfPi));
        c.b = m;
        c.margin = std::max(c.margin, m);
      }
      keep(per_q[q], c);
    }
  });
  Best best;
  double bound = kNegInf, rig = kNegInf;
  std::uint64_t total = 0, total_band = 0, skipped = 0;
  for (std::size_t q = 0; q < nq; ++q) {
    keep(best, per_q[q]);
    bound = std::max(bound, per_q[q].a);
    rig = std::max(rig, per_q[q].b);
    total += minima[q];
    total_band += band[q];
  }
  for (std::size_t f = 0; f < nf; ++f) skipped += isolated[f];
  r.worst_margin = best.margin;
  r.extras = {{"bound_margin", bound}, {"rigidity_margin", rig}};
  r.counts = {{"local_minima", total}, {"band", total_band}, {"skipped_isolated", skipped}};
  if (total > 0) {
    Witness w;
    w.points = {{"q", Q.points[best.q]}, {"p0", F[best.p]}};
    w.values = {{"dqp0", best.a + kHalfPi}, {"rigidity", best.b}};
    r.witness = std::move(w);
  }
  finalize(r, total);
  return r;
}

CheckReport check_lemma43(const Space& space, const SubsetNet& F, const Net& Q,
                          const TheoremOptions& opts) {
  require_k1(space);
  const Resolved rs = resolve(opts, F, true);
  CheckReport r;
  r.check = "lemma43";
  base_params(r, rs, F, Q);
  const std::size_t nf = F.size(), nq = Q.points.size();
  if (nf < 2 || nq == 0) {
    finalize(r, 0);
    return r;
  }
  const auto t = qf_table(space, F, Q, opts.threads);
  const auto ff = ff_table(space, F, opts.threads);
  const double cutoff = opts.proximity_mult * F.net.mesh;
  r.params.emplace_back("cutoff", cutoff);
  struct Tally {
    Best best;
    double sum = kNegInf, dich = kNegInf;
    std::uint64_t pairs = 0, near_eq = 0, antipodal = 0, right = 0;
  };
  std::vector<Tally> per_q(nq);
  parallel_for(nq, opts.threads, [&](std::size_t q) {
    const double* row = &t[q * nf];
    const double d = *std::min_element(row, row + nf);
    const double rig = rigidity_over(row, nf);
    Tally& tl = per_q[q];
    for (std::size_t p = 0; p < nf; ++p) {
      if (row[p] > d + opts.foot_tol) continue;
      for (std::size_t pp = 0; pp < nf; ++pp) {
        if (pp == p) continue;
        ++tl.pairs;
        const double m = row[p] + row[pp] - kPi;
        Best c{m, q, p, pp, m, kNegInf};
        tl.sum = std::max(tl.sum, m);
        if (m >= -rs.band && d > cutoff) {
          ++tl.near_eq;
          const double antip = kPi - ff[p * nf + pp];
          if (antip <= rs.tol) ++tl.antipodal;
          if (rig <= rs.tol) ++tl.right;
          c.b = std::min(antip, rig);
          c.margin = std::max(m, c.b);
          tl.dich = std::max(tl.dich, c.b);
        }
        keep(tl.best, c);
      }
    }
  });
  Best best;
  double sum = kNegInf, dich = kNegInf;
  std::uint64_t pairs = 0, near_eq = 0, antipodal = 0, right = 0;
  for (const Tally& tl : per_q) {
    keep(best, tl.best);
    sum = std::max(sum, tl.sum);
    dich = std::max(dich, tl.dich);
    pairs += tl.pairs;
    near_eq += tl.near_eq;
    antipodal += tl.antipodal;
    right += tl.right;
  }
  r.worst_margin = best.margin;
  r.extras = {{"sum_margin", sum}, {"dichotomy_margin", dich}};
  r.counts = {{"pairs", pairs},
              {"near_equality", near_eq},
              {"branch_antipodal", antipodal},
              {"branch_right_angle", right}};
  Witness w;
  w.points = {{"q", Q.points[best.q]}, {"p", F[best.p]}, {"p2", F[best.r]}};
  w.values = {{"sum_margin", best.a}, {"dichotomy", best.b}};
  r.witness = std::move(w);
  finalize(r, pairs);
  return r;
}

double weighted_cos(const Lemma44Instance& inst, const Point& y) {
  return inst.a1 * inst.space->cos_dist(inst.x1, y) + inst.a2 * inst.space->cos_dist(inst.x2, y);
}

CheckReport check_lemma44(const Lemma44Instance& inst, const Net& H, const TheoremOptions& opts) {
  if (inst.space == nullptr) throw Error(ErrorCode::kInvalidSpec, "instance has no space");
  const Space& space = *inst.space;
  require_k1(space);
  if (inst.a1 < 0.0 || inst.a2 < 0.0) {
    throw Error(ErrorCode::kHypothesisFailed, "weights must be nonnegative");
  }
  const SubsetNet& F = inst.F;
  const std::size_t nf = F.size();
  if (nf == 0) throw Error(ErrorCode::kHypothesisFailed, "empty subset");
  double hyp = kNegInf;
  double equality = 0.0;
  for (std::size_t f = 0; f < nf; ++f) {
    const double v = weighted_cos(inst, F[f]);
    hyp = std::max(hyp, v);
    equality = std::max(equality, std::abs(v));
  }
  if (hyp > inst.hypothesis_tol) {
    std::ostringstream os;
    os << "weighted cosine sum reaches " << hyp << " on the subset";
    throw Error(ErrorCode::kHypothesisFailed, os.str());
  }
  const Resolved rs = resolve(opts, F);
  CheckReport r;
  r.check = "lemma44";
  r.params = {{"tol", rs.tol},
              {"a1", inst.a1},
              {"a2", inst.a2},
              {"mesh_subset", F.net.mesh},
              {"seed", static_cast<double>(H.seed)}};

  // Right-angle sub-case: feet of x1 and x2 not antipodal.
  double right = kNegInf;
  const std::size_t xi1 = nearest(space, F.net.points, inst.x1).first;
  const std::size_t xi2 = nearest(space, F.net.points, inst.x2).first;
  const double feet_gap = space.dist(F[xi1], F[xi2]);
  const bool right_case = inst.a1 > 0.0 && inst.a2 > 0.0 && feet_gap < kPi - rs.tol;
  if (right_case) {
    right = 0.0;
    for (std::size_t f = 0; f < nf; ++f) {
      right = std::max({right, std::abs(space.dist(inst.x1, F[f]) - kHalfPi),
                        std::abs(space.dist(inst.x2, F[f]) - kHalfPi)});
    }
  }

  // Sign transfer.
  struct Eta {
    int state = 0;  // 0 skipped, 1 agree, 2 zero band, 3 mismatch
    double margin = kNegInf;
    double lhs = 0, rhs = 0;
    std::size_t foot = 0;
  };
  std::vector<Eta> etas(H.points.size());
  parallel_for(H.points.size(), opts.threads, [&](std::size_t h) {
    const Point& eta = H.points[h];
    const auto feet = foot_points(space, F, eta, opts.foot_tol);
    if (feet.size() != 1) return;
    const Point& xi = F[feet[0]];
    const double dxe = space.dist(xi, eta);
    if (dxe <= 1e-12) return;
    Eta& e = etas[h];
    e.foot = feet[0];
    e.lhs = weighted_cos(inst, eta);
    e.rhs = 0.0;
    const Point* xs[2] = {&inst.x1, &inst.x2};
    const double as[2] = {inst.a1, inst.a2};
    for (int i = 0; i < 2; ++i) {
      const double s = space.dist(*xs[i], xi);
      const double theta = comparison_angle_clamped(1.0, s, dxe, space.dist(*xs[i], eta));
      e.rhs += as[i] * std::sin(s) * std::cos(theta);
    }
    const double small = std::min(std::abs(e.lhs), std::abs(e.rhs));
    if (std::abs(e.lhs) <= rs.tol || std::abs(e.rhs) <= rs.tol) {
      e.state = 2;
      e.margin = small - rs.tol;
    } else if ((e.lhs > 0) == (e.rhs > 0)) {
      e.state = 1;
      e.margin = -small;
    } else {
      e.state = 3;
      e.margin = small;
    }
  });
  std::uint64_t agree = 0, zero = 0, mismatch = 0, skipped = 0;
  double sign = kNegInf;
  std::size_t wh = 0;
  for (std::size_t h = 0; h < etas.size(); ++h) {
    switch (etas[h].state) {
      case 0: ++skipped; continue;
      case 1: ++agree; break;
      case 2: ++zero; break;
      default: ++mismatch; break;
    }
    if (etas[h].margin > sign) {
      sign = etas[h].margin;
      wh = h;
    }
  }
  r.worst_margin = std::max({equality, right, sign});
  r.extras = {{"equality_margin", equality},
              {"right_angle_margin", right},
              {"sign_margin", sign},
              {"feet_gap", feet_gap}};
  r.counts = {{"agree", agree}, {"zero_band", zero}, {"mismatch", mismatch}, {"skipped", skipped}};
  Witness w;
  if (sign >= std::max(equality, right) && agree + zero + mismatch > 0) {
    w.points = {{"eta", H.points[wh]}, {"xi", F[etas[wh].foot]}};
    w.values = {{"lhs", etas[wh].lhs}, {"rhs", etas[wh].rhs}};
  } else {
    w.points = {{"xi1", F[xi1]}, {"xi2", F[xi2]}};
    w.values = {{"equality_margin", equality}, {"right_angle_margin", right}};
  }
  r.witness = std::move(w);
  finalize(r, nf + agree + zero + mismatch);
  return r;
}

CheckReport check_prop22(const Space& space, const SubsetNet& F, const TheoremOptions& opts) {
  if (space.kind() != Kind::kSuspension) {
    throw Error(ErrorCode::kWrongConstructor, "closure check needs a suspension, got " +
                                                  kind_name(space.kind()));
  }
  const Point base0 = space.child(0)->origin();
  const Point z1 = suspension_point(0.0, base0);
  const Point z2 = suspension_point(kPi, base0);
  if (F.size() < 2) throw Error(ErrorCode::kHypothesisFailed, "subset needs at least two points");
  if (nearest(space, F.net.points, z1).second > 1e-9) {
    throw Error(ErrorCode::kHypothesisFailed, "subset does not contain the pole");
  }
  const Resolved rs = resolve(opts, F);
  CheckReport r;
  r.check = "prop22";
  r.params = {{"tol", rs.tol}, {"mesh_subset", F.net.mesh}};

  std::vector<double> lats;
  std::vector<Point> bases;
  const Space& base = *space.child(0);
  for (std::size_t f = 0; f < F.size(); ++f) {
    const Point p = space.canonical(F[f]);
    lats.push_back(p.t);
    if (near_pole(p.t)) continue;
    const Point& b = p.sub.at(0);
    const bool seen = std::any_of(bases.begin(), bases.end(),
                                  [&](const Point& c) { return base.same_point(b, c); });
    if (!seen) bases.push_back(b);
  }
  std::sort(lats.begin(), lats.end());
  lats.erase(std::unique(lats.begin(), lats.end(),
                         [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
             lats.end());

  const double z2_gap = nearest(space, F.net.points, z2).second;
  std::vector<std::pair<double, Point>> per_base(bases.size(), {kNegInf, Point{}});
  parallel_for(bases.size(), opts.threads, [&](std::size_t i) {
    for (double s : lats) {
      const Point m = suspension_point(s, bases[i]);
      const double g = nearest(space, F.net.points, m).second;
      if (g > per_base[i].first) per_base[i] = {g, m};
    }
  });
  double meridian = kNegInf;
  Point worst_pt = z2;
  for (const auto& [g, m] : per_base) {
    if (g > meridian) {
      meridian = g;
      worst_pt = m;
    }
  }
  r.worst_margin = std::max(z2_gap, meridian);
  r.extras = {{"z2_gap", z2_gap}, {"meridian_gap", meridian}};
  r.counts = {{"bases", bases.size()},
              {"latitudes", lats.size()},
              {"samples", bases.size() * lats.size()}};
  Witness w;
  if (z2_gap >= meridian) {
    w.points = {{"z2", z2}};
    w.values = {{"gap", z2_gap}};
  } else {
    w.points = {{"meridian_point", worst_pt}};
    w.values = {{"gap", meridian}};
  }
  r.witness = std::move(w);
  finalize(r, 1 + bases.size() * lats.size());
  return r;
}

SpaceHandle directions_at_vertex(const Space& space, const Point& v) {
  space.validate(v);
  const Point c = space.canonical(v);
  if (space.kind() == Kind::kCone && c.t == 0.0) return space.child(0);
  if (space.kind() == Kind::kSuspension && (c.t == 0.0 || c.t == kPi)) return space.child(0);
  throw Error(ErrorCode::kUnsupportedVertex,
              "point is not a cone apex or suspension pole of " + space.describe());
}

CheckReport check_c1_at_vertex(const Space& space, const SubsetNet& F, const Point& v,
                               const VertexOptions& opts) {
  const SpaceHandle base = directions_at_vertex(space, v);
  if (nearest(space, F.net.points, v).second > 1e-9) {
    throw Error(ErrorCode::kNotInSubset, "vertex is not a member of the subset net");
  }
  const double mesh = F.net.mesh;
  const double inner = opts.inner_mult * mesh, outer = opts.outer_mult * mesh;
  std::vector<Point> dirs;
  for (std::size_t f = 0; f < F.size(); ++f) {
    const double d = space.dist(v, F[f]);
    if (d < inner || d > outer) continue;
    const Point b = space.canonical(F[f]).sub.at(0);
    const bool seen = std::any_of(dirs.begin(), dirs.end(),
                                  [&](const Point& c) { return base->same_point(b, c); });
    if (!seen) dirs.push_back(b);
  }
  NetOptions no;
  no.resolution = opts.base_resolution;
  const Net Qb = build_net(*base, no);
  const double tol = std::isnan(opts.tol) ? 1e-6 : opts.tol;
  CheckReport r;
  if (dirs.size() >= 2) {
    const SubsetNet proj = subset_list(*base, dirs, "directions", Qb.mesh);
    CheckOptions co;
    co.tol = tol;
    co.threads = opts.threads;
    r = check_quasi_convex(*base, proj, Qb, co);
    r.check = "c1-vertex";
  } else {
    r.check = "c1-vertex";
    r.params = {{"tol", tol}};
    if (dirs.size() == 1) {
      double worst = kNegInf;
      std::size_t arg = 0;
      for (std::size_t i = 0; i < Qb.points.size(); ++i) {
        const double m = base->dist(Qb.points[i], dirs[0]) - kHalfPi;
        if (m > worst) {
          worst = m;
          arg = i;
        }
      }
      r.worst_margin = worst;
      r.counts = {{"base_points", Qb.points.size()}};
      Witness w;
      w.points = {{"zeta", Qb.points[arg]}, {"direction", dirs[0]}};
      w.values = {{"distance", worst + kHalfPi}};
      r.witness = std::move(w);
      finalize(r, Qb.points.size());
    } else {
      finalize(r, 0);
    }
  }
  r.params.emplace_back("annulus_inner", inner);
  r.params.emplace_back("annulus_outer", outer);
  r.extras.emplace_back("directions", static_cast<double>(dirs.size()));
  return r;
}

}  // namespace qcx
