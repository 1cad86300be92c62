#pragma once

#include <array>
#include <vector>

#include "gft/complex_power.hpp"

namespace gft {

enum class RayDirection { Up, Down };

/// {anchor + i t s : t >= 0}, s = +1 for Up and -1 for Down. Closed at the anchor.
struct Ray {
  cplx anchor;
  RayDirection direction;
};

/// Finite union of vertical rays excluded from the image of a functional.
struct SlitSpec {
  std::vector<Ray> rays;
};

// ---------------------------------------------------------------------------
// Two-slit sufficient condition for h in G(alpha, beta).

/// ((alpha - beta)/(alpha + beta)) * pi/2. Throws DegenerateSum when
/// alpha + beta <= 0 and OutOfRange outside (-1, 1].
double eta(double alpha, double beta);

/// Ray 1 points down from x1 + i y1_max, ray 2 points up from x2 + i y2_min.
/// Throws DegenerateAngle when cos(eta) = 0, where the bounds are undefined.
SlitSpec slit_constants(double alpha, double beta, int n);

/// Objective whose minimum over x > 0 produces the y-bounds:
/// 2x/((a+b)n) + (x + 1/x) sec^2(eta)/2 -+ sin(eta)/cos^2(eta), minus sign for
/// branch 1 and plus sign for branch 2.
double slit_objective(int branch, double x, double alpha, double beta, int n);

/// Closed-form minimizer (1 + 4 cos^2(eta)/((alpha+beta) n))^(-1/2), shared by
/// both branches.
double slit_minimizer(double alpha, double beta, int n);

/// C(lambda) = (1 - lambda) sqrt(1 + 2/(1 - lambda)), lambda in [0, 1).
double c_lambda(double lambda);

// ---------------------------------------------------------------------------
// Tilted Caratheodory condition.

/// sec(lambda) sqrt(1 + 2 cos(lambda)) - tan(lambda), lambda in [0, pi/2).
double a_min(double lambda);

/// x + (x + 1/x) sec(lambda)/2 -+ tan(lambda): branch 1 subtracts the
/// tangent, branch 2 adds it.
double tilt_objective(int branch, double x, double lambda);

/// (1 + 2 cos(lambda))^(-1/2).
double tilt_minimizer(double lambda);

struct Thm3Constants {
  double x;
  double y_min;
  SlitSpec slit;  // {-x + i t : t >= y_min} and {x - i t : t >= y_min}
};

/// Constants of the gamma/delta slit condition for f'(z/f)^(alpha+1).
Thm3Constants thm3_constants(double gamma, double delta, int p, double lambda);

/// p gamma x cos(lambda) + delta ((x + 1/x) sec(lambda)/2 - tan(lambda)); its
/// minimum over x > 0 equals y_min.
double thm3_objective(double x, double gamma, double delta, int p, double lambda);

// ---------------------------------------------------------------------------
// Regions that imply the gamma/delta slit condition.

enum class RegionKind { HalfPlane, Rectangle, Disk, Ellipse };

struct RegionSpec {
  RegionKind kind = RegionKind::HalfPlane;
  double x = 0.0;  // X: half-plane abscissa, rectangle/ellipse real semi-axis
  double y = 0.0;  // Y: rectangle/ellipse imaginary semi-axis
  cplx center{0.0, 0.0};
  double radius = 0.0;
  double focal = 0.0;  // c = sqrt|X^2 - Y^2|
  bool foci_on_real_axis = true;

  /// Signed slack of the defining inequality at w; positive inside.
  double slack(cplx w) const;
};

/// Throws DiskRequiresLambdaZero when a DISK is requested with X != 0
/// (X vanishes exactly when lambda = 0), OutOfRange for invalid sizes.
RegionSpec build_region(RegionKind kind, double X, double Y, int p, double gamma, double delta);

// ---------------------------------------------------------------------------
// Weighted-argument condition.

struct ArgConstants {
  double delta1;
  double delta2;
  double M1;
  double M2;
  double x_star1;
  double x_star2;
};

/// N_j(x) = 4 x^((a+b)/2) ((x + 1/x) sec(eta) + (-1)^j 2 tan(eta))^(-1).
double n_branch(int branch, double x, double alpha, double beta);

/// Stationary point of N_j (s = alpha + beta): the positive root of
/// (2 - s) x^2 - (-1)^j 2 s sin(eta) x - (2 + s) = 0.
double arg_maximizer(int branch, double alpha, double beta);

/// The maximizer in the form ((-1)^j s/(2-s)) sin(eta) + sqrt((2+s)/(2-s)) cos(eta).
/// It agrees with arg_maximizer only when alpha = beta; kept for comparison.
double printed_arg_maximizer(int branch, double alpha, double beta);

/// Throws DegenerateSum when alpha + beta <= 0, DegenerateAngle when
/// cos(eta) <= 0 and OutOfRange outside alpha, beta in (-1,1), gamma in (0,1].
ArgConstants arg_theorem_constants(double alpha, double beta, double gamma);

/// M(alpha) = 4 / (r^((1-alpha)/2) + r^(-(1+alpha)/2)), r = (1+alpha)/(1-alpha).
double m_alpha(double alpha);

struct StrongOrders {
  double delta;
  double convex_order;  // ((1 - gamma) alpha + delta) / gamma
};

StrongOrders strong_orders(double alpha, double gamma);

// ---------------------------------------------------------------------------
// Tilt angle of the half-plane containing (1 + e^{i m pi} z)/(1 - b z).

/// atan2(b sin(m pi), b cos(m pi) + 1). Throws DegenerateDenominator when
/// b + e^{i m pi} = 0.
double lambda_tilt(double b, double m);

// ---------------------------------------------------------------------------
// Radii for U(lambda, alpha) intersected with R.

/// Positive root of 1 - (lambda + 2(alpha+1)) r - (lambda + 1) r^2.
double radius_convexity(double lambda, double alpha);

/// Positive root of alpha - (4 alpha + lambda) r - (alpha + lambda) r^2.
double radius_inv_alpha_convexity(double lambda, double alpha);

/// Ascending coefficients of the two quadratics above.
std::array<double, 3> convexity_polynomial(double lambda, double alpha);
std::array<double, 3> inv_alpha_polynomial(double lambda, double alpha);

}  // namespace gft
