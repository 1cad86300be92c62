#include "gft/constants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gft/error.hpp"

namespace gft {
namespace {

constexpr double kAngleTol = 1e-12;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::OutOfRange, what);
}

void require_branch(int branch) { require(branch == 1 || branch == 2, "branch index must be 1 or 2"); }

double sign_of_branch(int branch) { return branch % 2 == 0 ? 1.0 : -1.0; }  // (-1)^j

void check_slit_pair(double alpha, double beta) {
  require(alpha > -1.0 && alpha <= 1.0 && beta > -1.0 && beta <= 1.0, "alpha, beta must lie in (-1, 1]");
  if (!(alpha + beta > 0.0)) throw Error(ErrorCode::DegenerateSum, "alpha + beta must be positive");
}

double checked_cos_eta(double e) {
  double c = std::cos(e);
  if (std::abs(c) < kAngleTol) throw Error(ErrorCode::DegenerateAngle, "cos(eta) vanishes");
  return c;
}

void check_lambda(double lambda) { require(lambda >= 0.0 && lambda < kPi / 2, "lambda must lie in [0, pi/2)"); }

}  // namespace

double eta(double alpha, double beta) {
  check_slit_pair(alpha, beta);
  return (alpha - beta) / (alpha + beta) * kPi / 2;
}

double slit_minimizer(double alpha, double beta, int n) {
  require(n >= 1, "n must be >= 1");
  double e = eta(alpha, beta);
  double c = std::cos(e);
  return 1.0 / std::sqrt(1.0 + 4.0 * c * c / ((alpha + beta) * n));
}

double slit_objective(int branch, double x, double alpha, double beta, int n) {
  require_branch(branch);
  require(n >= 1, "n must be >= 1");
  double e = eta(alpha, beta);
  double c = checked_cos_eta(e);
  double s = std::sin(e);
  return 2.0 * x / ((alpha + beta) * n) + (x + 1.0 / x) / (2.0 * c * c) + sign_of_branch(branch) * s / (c * c);
}

SlitSpec slit_constants(double alpha, double beta, int n) {
  require(n >= 1, "n must be >= 1");
  double e = eta(alpha, beta);
  double c = checked_cos_eta(e);
  double s = std::sin(e);
  double sn = (alpha + beta) * n;
  double q = std::sqrt(1.0 + 4.0 * c * c / sn);
  double x1 = s / q;
  double x2 = -s / q;
  double scale = sn / (2.0 * c);
  double y1_max = -scale * (q - s);
  double y2_min = scale * (q + s);
  return SlitSpec{{Ray{cplx{x1, y1_max}, RayDirection::Down}, Ray{cplx{x2, y2_min}, RayDirection::Up}}};
}

double c_lambda(double lambda) {
  require(lambda >= 0.0 && lambda < 1.0, "C(lambda) needs lambda in [0, 1)");
  return (1.0 - lambda) * std::sqrt(1.0 + 2.0 / (1.0 - lambda));
}

double a_min(double lambda) {
  check_lambda(lambda);
  return std::sqrt(1.0 + 2.0 * std::cos(lambda)) / std::cos(lambda) - std::tan(lambda);
}

double tilt_objective(int branch, double x, double lambda) {
  require_branch(branch);
  check_lambda(lambda);
  return x + (x + 1.0 / x) / (2.0 * std::cos(lambda)) + sign_of_branch(branch) * std::tan(lambda);
}

double tilt_minimizer(double lambda) {
  check_lambda(lambda);
  return 1.0 / std::sqrt(1.0 + 2.0 * std::cos(lambda));
}

double thm3_objective(double x, double gamma, double delta, int p, double lambda) {
  check_lambda(lambda);
  double c = std::cos(lambda);
  return p * gamma * x * c + delta * ((x + 1.0 / x) / (2.0 * c) - std::tan(lambda));
}

Thm3Constants thm3_constants(double gamma, double delta, int p, double lambda) {
  require(gamma > 0.0 && delta > 0.0, "gamma and delta must be positive");
  require(p >= 1, "p must be >= 1");
  check_lambda(lambda);
  double c = std::cos(lambda);
  double root = std::sqrt(delta * (delta + 2.0 * p * gamma * c * c));
  double x = gamma * delta * std::sin(lambda) / root;
  double y_min = root / c - delta * std::tan(lambda);
  SlitSpec slit{{Ray{cplx{-x, y_min}, RayDirection::Up}, Ray{cplx{x, -y_min}, RayDirection::Down}}};
  return {x, y_min, slit};
}

double RegionSpec::slack(cplx w) const {
  switch (kind) {
    case RegionKind::HalfPlane:
      return w.real() - x;
    case RegionKind::Rectangle:
      return std::min(x - std::abs(w.real()), y - std::abs(w.imag()));
    case RegionKind::Disk:
      return radius - std::abs(w - center);
    case RegionKind::Ellipse: {
      cplx f = foci_on_real_axis ? cplx{focal, 0.0} : cplx{0.0, focal};
      double major = foci_on_real_axis ? x : y;
      return 2.0 * major - (std::abs(w - f) + std::abs(w + f));
    }
  }
  return 0.0;
}

RegionSpec build_region(RegionKind kind, double X, double Y, int p, double gamma, double delta) {
  require(std::isfinite(X) && std::isfinite(Y), "region parameters must be finite");
  RegionSpec r;
  r.kind = kind;
  r.x = X;
  r.y = Y;
  switch (kind) {
    case RegionKind::HalfPlane:
      break;
    case RegionKind::Rectangle:
      require(X >= 0.0 && Y > 0.0, "RECTANGLE needs X >= 0 and Y > 0");
      break;
    case RegionKind::Disk:
      if (X != 0.0) throw Error(ErrorCode::DiskRequiresLambdaZero, "DISK region is only available for lambda = 0");
      require(p >= 1 && gamma > 0.0 && delta > 0.0, "DISK needs p >= 1 and gamma, delta > 0");
      r.center = cplx{p * gamma, 0.0};
      r.radius = delta + p * gamma;
      break;
    case RegionKind::Ellipse:
      require(X >= 0.0 && Y >= 0.0 && X + Y > 0.0, "ELLIPSE needs nonnegative semi-axes, not both zero");
      r.focal = std::sqrt(std::abs(X * X - Y * Y));
      r.foci_on_real_axis = X >= Y;
      break;
  }
  return r;
}

double n_branch(int branch, double x, double alpha, double beta) {
  require_branch(branch);
  double e = eta(alpha, beta);
  double c = checked_cos_eta(e);
  double s = alpha + beta;
  return 4.0 * std::pow(x, s / 2.0) / ((x + 1.0 / x) / c + sign_of_branch(branch) * 2.0 * std::tan(e));
}

double arg_maximizer(int branch, double alpha, double beta) {
  require_branch(branch);
  double s = alpha + beta;
  require(s < 2.0, "alpha + beta must be below 2");
  double sn = std::sin(eta(alpha, beta));
  return (sign_of_branch(branch) * s * sn + std::sqrt(s * s * sn * sn + 4.0 - s * s)) / (2.0 - s);
}

double printed_arg_maximizer(int branch, double alpha, double beta) {
  require_branch(branch);
  double s = alpha + beta;
  require(s < 2.0, "alpha + beta must be below 2");
  double e = eta(alpha, beta);
  return sign_of_branch(branch) * s / (2.0 - s) * std::sin(e) + std::sqrt((2.0 + s) / (2.0 - s)) * std::cos(e);
}

ArgConstants arg_theorem_constants(double alpha, double beta, double gamma) {
  require(alpha > -1.0 && alpha < 1.0 && beta > -1.0 && beta < 1.0, "alpha, beta must lie in (-1, 1)");
  require(gamma > 0.0 && gamma <= 1.0, "gamma must lie in (0, 1]");
  double e = eta(alpha, beta);
  if (!(std::cos(e) > kAngleTol)) throw Error(ErrorCode::DegenerateAngle, "cos(eta) must be positive");
  double s = alpha + beta;
  ArgConstants out{};
  out.x_star1 = arg_maximizer(1, alpha, beta);
  out.x_star2 = arg_maximizer(2, alpha, beta);
  out.M1 = n_branch(1, out.x_star1, alpha, beta);
  out.M2 = n_branch(2, out.x_star2, alpha, beta);
  double tb = (1.0 - beta) * kPi / 2;
  double ta = (1.0 - alpha) * kPi / 2;
  out.delta1 = -(beta + 2.0 * gamma / kPi * std::atan(s * std::sin(tb) / (s * std::cos(tb) + out.M1)));
  out.delta2 = alpha + 2.0 * gamma / kPi * std::atan(s * std::sin(ta) / (s * std::cos(ta) + out.M2));
  return out;
}

double m_alpha(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "M(alpha) needs alpha in (0, 1)");
  double r = (1.0 + alpha) / (1.0 - alpha);
  return 4.0 / (std::pow(r, (1.0 - alpha) / 2.0) + std::pow(r, -(1.0 + alpha) / 2.0));
}

StrongOrders strong_orders(double alpha, double gamma) {
  require(gamma > 0.0 && gamma <= 1.0, "gamma must lie in (0, 1]");
  double m = m_alpha(alpha);
  double t = (1.0 - alpha) * kPi / 2;
  double delta = alpha + 2.0 * gamma / kPi * std::atan(2.0 * alpha * std::sin(t) / (2.0 * alpha * std::cos(t) + m));
  return {delta, ((1.0 - gamma) * alpha + delta) / gamma};
}

double lambda_tilt(double b, double m) {
  require(b >= 0.0 && b <= 1.0, "b must lie in [0, 1]");
  require(m >= -1.0 && m <= 1.0, "m must lie in [-1, 1]");
  double den = b * std::cos(m * kPi) + 1.0;
  if (std::abs(den) < 1e-14) throw Error(ErrorCode::DegenerateDenominator, "b cos(m pi) + 1 vanishes");
  return std::atan2(b * std::sin(m * kPi), den);
}

std::array<double, 3> convexity_polynomial(double lambda, double alpha) {
  return {1.0, -(lambda + 2.0 * (alpha + 1.0)), -(lambda + 1.0)};
}

std::array<double, 3> inv_alpha_polynomial(double lambda, double alpha) {
  return {alpha, -(4.0 * alpha + lambda), -(alpha + lambda)};
}

double radius_convexity(double lambda, double alpha) {
  require(lambda > 0.0 && lambda <= 1.0, "lambda must lie in (0, 1]");
  require(alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0, 1]");
  double l = lambda, a = alpha;
  return (-(l + 2.0 * (a + 1.0)) + std::sqrt(l * l + 8.0 * l + 4.0 * a * l + 4.0 * a * a + 8.0 * a + 8.0)) /
         (2.0 * (l + 1.0));
}

double radius_inv_alpha_convexity(double lambda, double alpha) {
  require(lambda > 0.0 && lambda <= 1.0, "lambda must lie in (0, 1]");
  require(alpha > 0.0 && alpha <= 1.0, "alpha must lie in (0, 1]");
  double l = lambda, a = alpha;
  return (-(l + 4.0 * a) + std::sqrt(l * l + 20.0 * a * a + 12.0 * l * a)) / (2.0 * (l + a));
}

}  // namespace gft
