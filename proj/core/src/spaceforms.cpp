#include "qcx/spaceforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcx/error.hpp"

namespace qcx {
namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(const TriangleSides& t) {
  std::ostringstream os;
  os.precision(17);
  os << "k=" << t.k << " s1=" << t.s1 << " s2=" << t.s2 << " opp=" << t.opp;
  return os.str();
}

// Angle from half-angle numerator and denominator, both nonnegative up to
// rounding.
double half_angle(double sin2, double cos2) {
  sin2 = std::max(sin2, 0.0);
  cos2 = std::max(cos2, 0.0);
  if (sin2 == 0.0 && cos2 == 0.0) return 0.0;
  return 2.0 * std::atan2(std::sqrt(sin2), std::sqrt(cos2));
}

// Unit-curvature angle; sides already rescaled. Assumes 0 < s1, s2 < pi.
double angle_unit(int sign, double s1, double s2, double opp) {
  const double d = s1 - s2;
  const double sum = s1 + s2;
  switch (sign) {
    case 0:
      return half_angle((opp - d) * (opp + d), (sum - opp) * (sum + opp));
    case 1:
      return half_angle(std::sin(0.5 * (opp - d)) * std::sin(0.5 * (opp + d)),
                        std::sin(0.5 * (sum - opp)) * std::sin(0.5 * (sum + opp)));
    default:
      return half_angle(std::sinh(0.5 * (opp - d)) * std::sinh(0.5 * (opp + d)),
                        std::sinh(0.5 * (sum - opp)) * std::sinh(0.5 * (sum + opp)));
  }
}

struct Scaled {
  int sign;
  double scale;
};

Scaled rescale(double k) {
  if (k == 0.0) return {0, 1.0};
  return {k > 0.0 ? 1 : -1, std::sqrt(std::abs(k))};
}

// Collinear limit when one side spans half the model circle.
double collinear_limit(double s1, double s2, double opp, double tol, bool strict,
                       const TriangleSides& t) {
  const double near = std::abs(opp - std::abs(s1 - s2));
  const double far = std::abs(opp - (s1 + s2));
  if (!strict) return near <= far ? 0.0 : kPi;
  if (near <= tol) return 0.0;
  if (far <= tol) return kPi;
  throw Error(ErrorCode::kInvalidSides,
              "side of length pi/sqrt(k) with non-collinear opposite side: " +
                  describe(t));
}

}  // namespace

double comparison_angle(const TriangleSides& t) {
  if (!std::isfinite(t.k) || !std::isfinite(t.s1) || !std::isfinite(t.s2) ||
      !std::isfinite(t.opp)) {
    throw Error(ErrorCode::kInvalidSides, "non-finite input: " + describe(t));
  }
  if (t.s1 < 0.0 || t.s2 < 0.0 || t.opp < 0.0) {
    throw Error(ErrorCode::kInvalidSides, "negative side: " + describe(t));
  }
  if (t.s1 == 0.0 || t.s2 == 0.0) {
    throw Error(ErrorCode::kDegenerateTriangle, "zero adjacent side: " + describe(t));
  }
  const double tol = kLengthTol;
  if (t.opp > t.s1 + t.s2 + tol || t.s1 > t.s2 + t.opp + tol ||
      t.s2 > t.s1 + t.opp + tol) {
    throw Error(ErrorCode::kInvalidSides, "triangle inequality fails: " + describe(t));
  }
  const Scaled sc = rescale(t.k);
  const double s1 = t.s1 * sc.scale;
  const double s2 = t.s2 * sc.scale;
  const double opp = t.opp * sc.scale;
  if (sc.sign > 0) {
    const double ltol = tol * sc.scale;
    if (s1 > kPi + ltol || s2 > kPi + ltol || opp > kPi + ltol) {
      throw Error(ErrorCode::kInvalidSides, "side exceeds pi/sqrt(k): " + describe(t));
    }
    if (s1 + s2 + opp > 2.0 * kPi + ltol) {
      throw Error(ErrorCode::kInvalidSides, "perimeter exceeds 2pi/sqrt(k): " + describe(t));
    }
    if (std::abs(s1 - kPi) <= ltol || std::abs(s2 - kPi) <= ltol) {
      return collinear_limit(s1, s2, opp, ltol, true, t);
    }
  }
  return angle_unit(sc.sign, s1, s2, opp);
}

double comparison_angle_clamped(double k, double s1, double s2, double opp) {
  const Scaled sc = rescale(k);
  s1 *= sc.scale;
  s2 *= sc.scale;
  opp *= sc.scale;
  if (s1 <= 0.0 || s2 <= 0.0) return 0.0;
  if (sc.sign > 0) {
    const double ltol = kLengthTol * sc.scale;
    s1 = std::min(s1, kPi);
    s2 = std::min(s2, kPi);
    opp = std::min(opp, kPi);
    if (kPi - s1 <= ltol || kPi - s2 <= ltol) {
      return collinear_limit(s1, s2, opp, ltol, false, TriangleSides{k, s1, s2, opp});
    }
  }
  return angle_unit(sc.sign, s1, s2, opp);
}

double side_from_angle(double k, double s1, double s2, double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    std::ostringstream os;
    os.precision(17);
    os << "theta=" << theta << " outside [0, pi]";
    throw Error(ErrorCode::kInvalidAngle, os.str());
  }
  if (!(s1 >= 0.0 && s2 >= 0.0)) {
    throw Error(ErrorCode::kInvalidSides, "negative side");
  }
  const Scaled sc = rescale(k);
  const double a = s1 * sc.scale;
  const double b = s2 * sc.scale;
  if (sc.sign > 0 && (a > kPi + kLengthTol || b > kPi + kLengthTol)) {
    throw Error(ErrorCode::kInvalidSides, "side exceeds pi/sqrt(k)");
  }
  const double sh = std::sin(0.5 * theta);
  const double ch = std::cos(0.5 * theta);
  const double d = a - b;
  double opp = 0.0;
  switch (sc.sign) {
    case 0:
      opp = std::sqrt(d * d + 4.0 * a * b * sh * sh);
      break;
    case 1: {
      const double prod = std::sin(a) * std::sin(b);
      const double sd = std::sin(0.5 * d);
      const double cs = std::cos(0.5 * (a + b));
      opp = half_angle(sd * sd + prod * sh * sh, cs * cs + prod * ch * ch);
      break;
    }
    default: {
      const double sd = std::sinh(0.5 * d);
      opp = 2.0 * std::asinh(std::sqrt(sd * sd + std::sinh(a) * std::sinh(b) * sh * sh));
      break;
    }
  }
  return opp / sc.scale;
}

double median_length(double k, double a, double b, double c) {
  const Scaled sc = rescale(k);
  a *= sc.scale;
  b *= sc.scale;
  c *= sc.scale;
  double m = 0.0;
  switch (sc.sign) {
    case 0:
      m = 0.5 * std::sqrt(std::max(0.0, 2.0 * a * a + 2.0 * b * b - c * c));
      break;
    case 1: {
      const double x = (std::cos(a) + std::cos(b)) / (2.0 * std::cos(0.5 * c));
      m = std::acos(std::clamp(x, -1.0, 1.0));
      break;
    }
    default: {
      const double x = (std::cosh(a) + std::cosh(b)) / (2.0 * std::cosh(0.5 * c));
      m = std::acosh(std::max(1.0, x));
      break;
    }
  }
  return m / sc.scale;
}

}  // namespace qcx
