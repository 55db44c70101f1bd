#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qcx/error.hpp"
#include "qcx/spaceforms.hpp"

namespace qcx {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(ComparisonAngle, EquilateralEuclidean) {
  EXPECT_NEAR(comparison_angle({0.0, 1.0, 1.0, 1.0}), kPi / 3.0, 1e-15);
}

TEST(ComparisonAngle, SphericalOctantIsExactlyRight) {
  EXPECT_EQ(comparison_angle({1.0, kPi / 2, kPi / 2, kPi / 2}), kPi / 2);
}

TEST(ComparisonAngle, CollinearRuleAtHalfCircle) {
  for (double d : {0.1, 0.5, 1.0, 2.0, 3.0}) {
    EXPECT_EQ(comparison_angle({1.0, d, kPi, kPi - d}), 0.0) << d;
    EXPECT_EQ(comparison_angle({1.0, kPi, d, kPi - d}), 0.0) << d;
  }
}

TEST(ComparisonAngle, CollinearRuleRejectsInteriorOpposite) {
  try {
    comparison_angle({1.0, 1.0, kPi, 2.5});
    FAIL() << "expected InvalidSides";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidSides);
  }
}

TEST(ComparisonAngle, ErrorsCarryCodes) {
  auto code_of = [](TriangleSides t) {
    try {
      comparison_angle(t);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kUsage;
  };
  EXPECT_EQ(code_of({0.0, 0.0, 1.0, 1.0}), ErrorCode::kDegenerateTriangle);
  EXPECT_EQ(code_of({0.0, 1.0, 0.0, 1.0}), ErrorCode::kDegenerateTriangle);
  EXPECT_EQ(code_of({0.0, 1.0, 1.0, 3.0}), ErrorCode::kInvalidSides);
  EXPECT_EQ(code_of({1.0, 2.0, 2.0, 5.0}), ErrorCode::kInvalidSides);
  EXPECT_EQ(code_of({1.0, 3.5, 1.0, 3.0}), ErrorCode::kInvalidSides);
  EXPECT_EQ(code_of({1.0, 3.0, 3.0, 3.0}), ErrorCode::kInvalidSides);  // perimeter > 2pi
  EXPECT_EQ(code_of({0.0, -1.0, 1.0, 1.0}), ErrorCode::kInvalidSides);
  EXPECT_EQ(code_of({0.0, std::nan(""), 1.0, 1.0}), ErrorCode::kInvalidSides);
}

TEST(ComparisonAngle, AgreesWithPlainLawOfCosines) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> side(0.05, 1.4);
  for (int i = 0; i < 2000; ++i) {
    const double a = side(rng), b = side(rng);
    const double lo = std::abs(a - b), hi = a + b;
    const double c = lo + (hi - lo) * std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    for (double k : {-1.0, 0.0, 1.0}) {
      EXPECT_NEAR(comparison_angle({k, a, b, c}), oracle::law_of_cosines_angle(k, a, b, c), 1e-9)
          << k << " " << a << " " << b << " " << c;
    }
  }
}

TEST(ComparisonAngle, ArbitraryCurvatureRescales) {
  // k = 4 on sides s equals k = 1 on sides 2s.
  EXPECT_NEAR(comparison_angle({4.0, 0.3, 0.5, 0.6}), comparison_angle({1.0, 0.6, 1.0, 1.2}),
              1e-14);
  EXPECT_NEAR(comparison_angle({-0.25, 1.0, 2.0, 2.5}),
              comparison_angle({-1.0, 0.5, 1.0, 1.25}), 1e-14);
}

TEST(ComparisonAngle, StrictlyIncreasingInOpposite) {
  for (double k : {-1.0, 0.0, 1.0}) {
    const double a = 0.9, b = 1.3;
    double prev = -1.0;
    for (int i = 1; i < 200; ++i) {
      const double c = (b - a) + (2.0 * a) * i / 200.0;
      const double th = comparison_angle({k, a, b, c});
      EXPECT_GT(th, prev) << k << " " << c;
      prev = th;
    }
  }
}

TEST(ComparisonAngle, ClampedMatchesValidatedOnValidInput) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> side(0.05, 1.5);
  for (int i = 0; i < 500; ++i) {
    const double a = side(rng), b = side(rng);
    const double c = std::abs(a - b) + (a + b - std::abs(a - b)) * 0.37;
    for (double k : {-1.0, 0.0, 1.0}) {
      EXPECT_EQ(comparison_angle({k, a, b, c}), comparison_angle_clamped(k, a, b, c));
    }
  }
  // Rounding noise past the triangle inequality does not produce NaN.
  EXPECT_FALSE(std::isnan(comparison_angle_clamped(0.0, 1.0, 1.0, 2.0 + 1e-12)));
  EXPECT_NEAR(comparison_angle_clamped(0.0, 1.0, 1.0, 2.0 + 1e-12), kPi, 1e-5);
}

TEST(SideFromAngle, Examples) {
  EXPECT_NEAR(side_from_angle(0.0, 3.0, 4.0, kPi / 2), 5.0, 1e-14);
  for (double x : {0.0, 0.3, 1.0, 2.0, kPi}) {
    EXPECT_NEAR(side_from_angle(1.0, kPi / 2, kPi / 2, x), x, 1e-14);
  }
  EXPECT_NEAR(side_from_angle(-1.0, 1.0, 1.0, kPi), 2.0, 1e-14);
}

TEST(SideFromAngle, RejectsAngleOutsideRange) {
  for (double th : {-0.1, kPi + 1e-6, std::nan("")}) {
    try {
      side_from_angle(0.0, 1.0, 1.0, th);
      FAIL() << th;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidAngle);
    }
  }
}

TEST(SideFromAngle, RoundtripProperty) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> side(0.01, 3.0);
  std::uniform_real_distribution<double> ang(0.01, kPi - 0.01);
  for (int i = 0; i < 20000; ++i) {
    const double k = static_cast<double>(static_cast<int>(i % 3) - 1);
    double a = side(rng), b = side(rng);
    if (k > 0) {
      a = std::min(a, kPi - 0.01);
      b = std::min(b, kPi - 0.01);
    }
    const double th = ang(rng);
    const double opp = side_from_angle(k, a, b, th);
    EXPECT_NEAR(comparison_angle({k, a, b, opp}), th, 1e-9) << k << " " << a << " " << b;
  }
}

// Angle at the vertex between a side of length s1 and a short side s2, with
// the opposite side taken from the Euclidean triangle of apex angle th.
double thin_angle(double k, double s1, double s2, double th) {
  return comparison_angle({k, s1, s2, side_from_angle(0.0, s1, s2, th)});
}

TEST(CrossCurvature, ShortSideLimitIsCurvatureFree) {
  for (double s1 : {0.2, 0.6, 1.0}) {
    for (double th : {0.4, 1.3, 2.5}) {
      // First-order Richardson estimate of the s2 -> 0 limit.
      auto limit = [&](double k) {
        return 2.0 * thin_angle(k, s1, 0.5e-4, th) - thin_angle(k, s1, 1e-4, th);
      };
      const double lm = limit(-1.0), l0 = limit(0.0), lp = limit(1.0);
      EXPECT_LE(std::abs(lm - l0), 1e-6) << s1 << " " << th;
      EXPECT_LE(std::abs(lp - l0), 1e-6) << s1 << " " << th;
      EXPECT_LE(std::abs(lp - lm), 1e-6) << s1 << " " << th;
    }
  }
}

TEST(CrossCurvature, RawGapShrinksLinearly) {
  for (double s1 : {0.2, 1.0}) {
    const double g1 = std::abs(thin_angle(1.0, s1, 1e-4, 1.3) - thin_angle(-1.0, s1, 1e-4, 1.3));
    const double g2 = std::abs(thin_angle(1.0, s1, 5e-5, 1.3) - thin_angle(-1.0, s1, 5e-5, 1.3));
    EXPECT_NEAR(g2 / g1, 0.5, 0.01) << s1;
  }
}

TEST(MedianLength, EuclideanAndSpherical) {
  // Right isosceles Euclidean triangle: median to the hypotenuse is half of it.
  EXPECT_NEAR(median_length(0.0, 1.0, 1.0, std::sqrt(2.0)), std::sqrt(2.0) / 2.0, 1e-14);
  // Octant: median from the vertex to the midpoint of the opposite side.
  EXPECT_NEAR(median_length(1.0, kPi / 2, kPi / 2, kPi / 2), kPi / 2, 1e-14);
}

}  // namespace
}  // namespace qcx
