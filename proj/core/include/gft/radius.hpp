#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gft/analytic_function.hpp"
#include "gft/membership.hpp"

namespace gft {

/// Horner evaluation of sum c_k x^k (ascending coefficients).
double poly_eval(std::span<const double> coeffs, double x);

/// Bisection root of the polynomial on [lo, hi]. Throws NoSignChange when the
/// endpoint values have the same strict sign, InvalidBracket when lo >= hi.
double poly_root_bisect(std::span<const double> coeffs, double lo, double hi, double tol = 1e-12);

inline constexpr double kRadiusTol = 1e-4;

/// Minimum slack of the class inequality on the single ring |z| = r.
/// spec must be STARLIKE, CONVEX or M_ALPHA. Throws EvaluationError when a
/// sample cannot be evaluated.
double ring_margin(const AnalyticFunction& f, const ClassSpec& spec, double r, int angles);

inline constexpr double kRadiusScanStep = 0.01;

/// Radius of the first ring (within tol) on which the strict Re-inequality
/// fails: rings are scanned outward in steps of kRadiusScanStep and the first
/// failure is refined by bisection. Returns 1 - tol when every ring passes. A
/// ring on which f cannot be evaluated counts as failing.
double property_radius(const AnalyticFunction& f, const ClassSpec& spec, int grid_angles = 720,
                       double tol = kRadiusTol);

struct FamilyRadius {
  double radius;
  std::string witness;  // label of the member attaining the minimum
};

/// Minimum of property_radius over the family. Throws BadFamilySpec when empty.
FamilyRadius family_property_radius(const std::vector<AnalyticFunction>& family, const ClassSpec& spec,
                                    int grid_angles = 720, double tol = kRadiusTol);

/// Members of the family whose U(lambda, alpha) and R checks both HOLD on grid.
std::vector<AnalyticFunction> filter_u_and_r(const std::vector<AnalyticFunction>& family, double lambda, double alpha,
                                             const DiskGrid& grid);

/// min over |z| = r of Re(z psi'/psi) + 2r/(1 - r^2) for psi = (1 + u z)/(1 - v z).
/// Nonnegative for psi in the Caratheodory class.
double psi_estimate_margin(double u, double v, double r, int angles = 720);

/// min over |z| = r of Re(z c/(1 + z c)) + r/(1 - r) for a constant |c| <= 1.
double phi_estimate_margin(cplx c, double r, int angles = 720);

}  // namespace gft
