#include "qcx/qgeo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcx/error.hpp"
#include "qcx/parallel.hpp"
#include "qcx/spaceforms.hpp"

namespace qcx {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Lazily filled rows of subset-to-subset distances.
class RowCache {
 public:
  RowCache(const Space& space, const SubsetNet& F, int threads)
      : space_(space), F_(F), threads_(threads), rows_(F.size()) {}

  const std::vector<double>& row(std::size_t a) {
    std::vector<double>& r = rows_[a];
    if (r.empty()) {
      r.resize(F_.size());
      parallel_for(F_.size(), threads_, [&](std::size_t y) { r[y] = space_.dist(F_[a], F_[y]); });
    }
    return r;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  const Space& space_;
  const SubsetNet& F_;
  int threads_;
  std::vector<std::vector<double>> rows_;
};

std::size_t index_in(const Space& space, const SubsetNet& F, const Point& p) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (space.same_point(F[i], p)) return i;
  }
  throw Error(ErrorCode::kNotInSubset, "chain point is not a member of the subset net");
}

// argmin over y of |prev y|^2 + |y next|^2, first index on ties.
std::pair<std::size_t, double> best_interior(const std::vector<double>& prev,
                                             const std::vector<double>& next) {
  std::size_t best = 0;
  double bv = std::numeric_limits<double>::infinity();
  for (std::size_t y = 0; y < prev.size(); ++y) {
    const double v = prev[y] * prev[y] + next[y] * next[y];
    if (v < bv) {
      bv = v;
      best = y;
    }
  }
  return {best, bv};
}

bool is_graph(const Space& s) { return s.kind() == Kind::kGraph; }

// Exact minimizer of sum |a_i a_{i+1}|^2 with fixed ends, layer by layer
// over the net. Ties go to the smaller index.
std::vector<std::size_t> exact_chain(RowCache& rows, std::size_t i0, std::size_t im, int m,
                                     int threads) {
  const std::size_t n = rows.size();
  for (std::size_t a = 0; a < n; ++a) rows.row(a);
  const auto sq = [&](std::size_t a, std::size_t b) {
    const double d = rows.row(a)[b];
    return d * d;
  };
  std::vector<std::vector<std::size_t>> parent(static_cast<std::size_t>(m));
  std::vector<double> cost(n), next(n);
  for (std::size_t y = 0; y < n; ++y) cost[y] = sq(i0, y);
  for (int layer = 2; layer < m; ++layer) {
    auto& par = parent[static_cast<std::size_t>(layer)];
    par.assign(n, 0);
    parallel_for(n, threads, [&](std::size_t y) {
      double bv = std::numeric_limits<double>::infinity();
      std::size_t bx = 0;
      for (std::size_t x = 0; x < n; ++x) {
        const double v = cost[x] + sq(x, y);
        if (v < bv) {
          bv = v;
          bx = x;
        }
      }
      next[y] = bv;
      par[y] = bx;
    });
    std::swap(cost, next);
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(m) + 1);
  idx[0] = i0;
  idx[static_cast<std::size_t>(m)] = im;
  if (m == 1) return idx;
  double bv = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < n; ++x) {
    const double v = cost[x] + sq(x, im);
    if (v < bv) {
      bv = v;
      idx[static_cast<std::size_t>(m) - 1] = x;
    }
  }
  for (int layer = m - 1; layer >= 2; --layer) {
    idx[static_cast<std::size_t>(layer) - 1] =
        parent[static_cast<std::size_t>(layer)][idx[static_cast<std::size_t>(layer)]];
  }
  return idx;
}

}  // namespace

Chain make_chain(const Space& space, std::vector<Point> points) {
  if (points.size() < 2) throw Error(ErrorCode::kInvalidSpec, "a chain needs at least two points");
  Chain c;
  c.points = std::move(points);
  c.params.assign(c.points.size(), 0.0);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
    const double d = space.dist(c.points[i], c.points[i + 1]);
    c.params[i + 1] = c.params[i] + d;
    sum += d * d;
  }
  c.energy = static_cast<double>(c.m()) * sum;
  return c;
}

double chain_energy(const Space& space, const Chain& chain) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < chain.points.size(); ++i) {
    const double d = space.dist(chain.points[i], chain.points[i + 1]);
    sum += d * d;
  }
  return static_cast<double>(chain.m()) * sum;
}

Chain minimize_chain(const Space& space, const SubsetNet& F, const Point& a0, const Point& am,
                     int m, const MinimizeOptions& opts) {
  if (m < 1) throw Error(ErrorCode::kInvalidSpec, "chain needs m >= 1");
  const std::size_t i0 = index_in(space, F, a0);
  const std::size_t im = index_in(space, F, am);
  RowCache rows(space, F, opts.threads);
  std::vector<std::size_t> idx(static_cast<std::size_t>(m) + 1);
  idx[0] = i0;
  idx[static_cast<std::size_t>(m)] = im;
  for (int i = 1; i < m; ++i) {
    const Point g = space.geodesic_point(F[i0], F[im], static_cast<double>(i) / m);
    idx[static_cast<std::size_t>(i)] = nearest(space, F.net.points, g).first;
  }
  auto energy_of = [&] {
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
      const double d = rows.row(idx[i])[idx[i + 1]];
      sum += d * d;
    }
    return m * sum;
  };
  double energy = energy_of();
  std::size_t sweeps = 0;
  auto descend = [&] {
    while (sweeps < opts.max_iters) {
      ++sweeps;
      bool changed = false;
      for (int i = 1; i < m; ++i) {
        const auto& prev = rows.row(idx[i - 1]);
        const auto& next = rows.row(idx[i + 1]);
        const std::size_t cur = idx[i];
        const double cur_v = prev[cur] * prev[cur] + next[cur] * next[cur];
        const auto [best, bv] = best_interior(prev, next);
        if (bv < cur_v) {
          idx[i] = best;
          changed = true;
        }
      }
      const double e = energy_of();
      const double drop = energy - e;
      energy = e;
      if (!changed) break;
      if (opts.eps > 0.0 && drop < opts.eps) break;
    }
  };
  descend();
  const double nf = static_cast<double>(F.size());
  bool exact = false;
  if (opts.exact && F.size() <= opts.exact_max_points && m * nf * nf <= opts.exact_budget) {
    std::vector<std::size_t> best = exact_chain(rows, i0, im, m, opts.threads);
    exact = true;
    std::swap(best, idx);
    const double e = energy_of();
    if (e < energy) {
      energy = e;
      descend();
    } else {
      std::swap(best, idx);
    }
  }
  std::vector<Point> pts;
  for (std::size_t i : idx) pts.push_back(F[i]);
  Chain c = make_chain(space, std::move(pts));
  c.sweeps = sweeps;
  c.exact = exact;
  return c;
}

CheckReport check_stationarity(const Space& space, const SubsetNet& F, const Chain& chain,
                               double tol) {
  CheckReport r;
  r.check = "stationarity";
  r.params = {{"tol", tol}, {"m", static_cast<double>(chain.m())}};
  const int m = chain.m();
  if (m < 2) {
    finalize(r, 0);
    return r;
  }
  RowCache rows(space, F, 1);
  std::vector<std::size_t> idx;
  for (const Point& p : chain.points) idx.push_back(index_in(space, F, p));
  double worst = kNegInf;
  int at = 0;
  std::size_t arg = 0;
  for (int i = 1; i < m; ++i) {
    const auto& prev = rows.row(idx[i - 1]);
    const auto& next = rows.row(idx[i + 1]);
    const std::size_t cur = idx[i];
    const double cur_v = prev[cur] * prev[cur] + next[cur] * next[cur];
    const auto [best, bv] = best_interior(prev, next);
    if (cur_v - bv > worst) {
      worst = cur_v - bv;
      at = i;
      arg = best;
    }
  }
  r.worst_margin = worst;
  r.counts = {{"interior", static_cast<std::uint64_t>(m - 1)}};
  Witness w;
  w.points = {{"a", chain.points[static_cast<std::size_t>(at)]}, {"y", F[arg]}};
  w.values = {{"index", static_cast<double>(at)}};
  r.witness = std::move(w);
  finalize(r, static_cast<std::uint64_t>(m - 1));
  return r;
}

namespace {

double auto_tol(const Space& space, const Chain& chain, const Net& P, double analytic) {
  return is_graph(space) ? 3.0 * P.mesh * chain.length() : analytic;
}

}  // namespace

CheckReport check_second_difference(const Space& space, const Chain& chain, const Net& P,
                                    double tol) {
  if (space.declared_k() != 0.0) {
    throw Error(ErrorCode::kWrongCurvature,
                "second-difference test needs declared k = 0, got " +
                    std::to_string(space.declared_k()));
  }
  CheckReport r;
  r.check = "second-difference";
  if (std::isnan(tol)) tol = auto_tol(space, chain, P, 1e-9);
  r.params = {{"tol", tol}, {"m", static_cast<double>(chain.m())}, {"mesh", P.mesh}};
  const int m = chain.m();
  if (m < 2 || P.points.empty()) {
    finalize(r, 0);
    return r;
  }
  std::vector<double> step(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) step[i] = chain.params[i + 1] - chain.params[i];
  double worst = kNegInf, max_abs = 0.0;
  std::size_t wp = 0;
  int wi = 0;
  for (std::size_t k = 0; k < P.points.size(); ++k) {
    std::vector<double> g(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
      const double d = space.dist(P.points[k], chain.points[i]);
      g[i] = d * d;
    }
    for (int i = 1; i < m; ++i) {
      const double lhs = (g[i + 1] - g[i]) - (g[i] - g[i - 1]);
      const double rhs = step[i - 1] * step[i - 1] + step[i] * step[i];
      const double margin = lhs - rhs;
      max_abs = std::max(max_abs, std::abs(margin));
      if (margin > worst) {
        worst = margin;
        wp = k;
        wi = i;
      }
    }
  }
  r.worst_margin = worst;
  r.extras = {{"max_abs_gap", max_abs}};
  r.counts = {{"evaluations", static_cast<std::uint64_t>(P.points.size()) *
                                  static_cast<std::uint64_t>(m - 1)}};
  Witness w;
  w.points = {{"p", P.points[wp]}, {"a", chain.points[static_cast<std::size_t>(wi)]}};
  w.values = {{"index", static_cast<double>(wi)}};
  r.witness = std::move(w);
  finalize(r, r.count("evaluations"));
  return r;
}

CheckReport check_angle_comparison(const Space& space, const Chain& chain, const Net& P,
                                   double tol) {
  CheckReport r;
  r.check = "angle-comparison";
  // acos near 0 and pi loses about sqrt(machine eps) of the angle.
  if (std::isnan(tol)) tol = auto_tol(space, chain, P, 1e-6);
  r.params = {{"tol", tol}, {"m", static_cast<double>(chain.m())}, {"k", space.declared_k()}};
  const int m = chain.m();
  const double k = space.declared_k();
  double worst = kNegInf;
  std::size_t wp = 0;
  int wi = 0;
  double wb = 0, wf = 0;
  std::uint64_t evaluated = 0;
  for (std::size_t j = 0; j < P.points.size(); ++j) {
    const Point& p = P.points[j];
    const double d0 = space.dist(p, chain.points.front());
    const double dm = space.dist(p, chain.points.back());
    for (int i = 1; i < m; ++i) {
      const double di = space.dist(p, chain.points[static_cast<std::size_t>(i)]);
      if (di <= 0.0) continue;
      const double back = comparison_angle_clamped(k, di, chain.params[i] - chain.params[0], d0);
      const double fwd = comparison_angle_clamped(k, di, chain.params[m] - chain.params[i], dm);
      const double margin = back + fwd - kPi;
      ++evaluated;
      if (margin > worst) {
        worst = margin;
        wp = j;
        wi = i;
        wb = back;
        wf = fwd;
      }
    }
  }
  r.worst_margin = worst;
  r.counts = {{"evaluations", evaluated}};
  if (evaluated > 0) {
    Witness w;
    w.points = {{"p", P.points[wp]}, {"a", chain.points[static_cast<std::size_t>(wi)]}};
    w.values = {{"index", static_cast<double>(wi)}, {"angle_back", wb}, {"angle_forward", wf}};
    r.witness = std::move(w);
  }
  finalize(r, evaluated);
  return r;
}

SmTable sm_convergence(const Space& space, const SubsetNet& F, const Point& a0, const Point& am,
                       const std::vector<int>& m_list, const MinimizeOptions& opts) {
  for (std::size_t i = 1; i < m_list.size(); ++i) {
    if (m_list[i] <= m_list[i - 1]) {
      throw Error(ErrorCode::kInvalidSpec, "m list must be strictly increasing");
    }
  }
  SmTable table;
  double length = 0.0;
  for (int m : m_list) {
    const Chain c = minimize_chain(space, F, a0, am, m, opts);
    table.rows.push_back({m, c.energy, 0.0, check_stationarity(space, F, c).worst_margin});
    length = c.length();
  }
  table.reference = length * length;
  for (SmRow& row : table.rows) row.gap = std::abs(row.energy - table.reference);
  return table;
}

}  // namespace qcx
