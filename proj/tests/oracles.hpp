#pragma once

// Independent closed forms used as test oracles. Kept deliberately naive:
// plain arccos laws of cosines and explicit coordinates.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace qcx::oracle {

inline double clamp1(double x) { return std::clamp(x, -1.0, 1.0); }

inline double law_of_cosines_angle(double k, double a, double b, double c) {
  if (k == 0.0) return std::acos(clamp1((a * a + b * b - c * c) / (2.0 * a * b)));
  const double s = std::sqrt(std::abs(k));
  a *= s;
  b *= s;
  c *= s;
  if (k > 0.0) {
    return std::acos(clamp1((std::cos(c) - std::cos(a) * std::cos(b)) / (std::sin(a) * std::sin(b))));
  }
  return std::acos(
      clamp1((std::cosh(a) * std::cosh(b) - std::cosh(c)) / (std::sinh(a) * std::sinh(b))));
}

inline double dot(const std::vector<double>& u, const std::vector<double>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

inline double sphere_dist(const std::vector<double>& u, const std::vector<double>& v) {
  return std::acos(clamp1(dot(u, v)));
}

// Round S^2 point at colatitude t and azimuth phi.
inline std::vector<double> polar(double t, double phi) {
  return {std::sin(t) * std::cos(phi), std::sin(t) * std::sin(phi), std::cos(t)};
}

// True angle at p between great-circle directions towards q and r on S^n.
inline double sphere_angle(const std::vector<double>& p, const std::vector<double>& q,
                           const std::vector<double>& r) {
  auto tangent = [&](const std::vector<double>& x) {
    std::vector<double> t(x.size());
    const double d = dot(p, x);
    for (std::size_t i = 0; i < x.size(); ++i) t[i] = x[i] - d * p[i];
    const double n = std::sqrt(dot(t, t));
    for (double& c : t) c /= n;
    return t;
  };
  return std::acos(clamp1(dot(tangent(q), tangent(r))));
}

// Uniform m-chain on a great-circle arc of angle alpha, chord energy.
inline double chord_energy(int m, double alpha) {
  const double s = std::sin(alpha / (2.0 * m));
  return 4.0 * m * m * s * s;
}

}  // namespace qcx::oracle
