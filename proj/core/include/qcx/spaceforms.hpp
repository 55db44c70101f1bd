#pragma once

// Trigonometry of the constant-curvature model surfaces.

namespace qcx {

// Absolute slack on lengths when validating triangles.
inline constexpr double kLengthTol = 1e-9;

struct TriangleSides {
  double k = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double opp = 0.0;
};

// Angle between sides s1 and s2 of the model triangle. Validates the sides.
double comparison_angle(const TriangleSides& t);

// Same formula without validation, for sampled distances that may carry
// rounding noise. Sides equal to pi/sqrt(k) take the nearest collinear limit.
double comparison_angle_clamped(double k, double s1, double s2, double opp);

// Length of the side opposite angle theta.
double side_from_angle(double k, double s1, double s2, double theta);

// Distance from the apex between sides a and b to the midpoint of the
// opposite side c.
double median_length(double k, double a, double b, double c);

}  // namespace qcx
