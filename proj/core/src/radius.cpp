#include "gft/radius.hpp"

#include <cmath>
#include <limits>

#include "gft/error.hpp"
#include "gft/optimize.hpp"
#include "gft/parallel.hpp"

namespace gft {

double poly_eval(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double poly_root_bisect(std::span<const double> coeffs, double lo, double hi, double tol) {
  return bisect_root([&](double x) { return poly_eval(coeffs, x); }, lo, hi, tol);
}

double ring_margin(const AnalyticFunction& f, const ClassSpec& spec, double r, int angles) {
  if (spec.kind != ClassKind::Starlike && spec.kind != ClassKind::Convex && spec.kind != ClassKind::MAlpha)
    throw Error(ErrorCode::InvalidInput, "property radius supports STARLIKE, CONVEX and M_ALPHA");
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::OutOfRange, "ring radius must lie in (0, 1)");
  if (angles < 8) throw Error(ErrorCode::BadGridSpec, "ring needs at least 8 angles");
  double lo = std::numeric_limits<double>::infinity();
  for (int k = 0; k < angles; ++k) {
    const cplx z = std::polar(r, 2.0 * kPi * k / angles);
    try {
      lo = std::min(lo, class_slack(spec, f, z));
    } catch (const Error& e) {
      throw Error(ErrorCode::EvaluationError, std::string(e.what()) + " on ring r = " + std::to_string(r));
    }
  }
  return lo;
}

double property_radius(const AnalyticFunction& f, const ClassSpec& spec, int grid_angles, double tol) {
  if (!(tol > 0.0 && tol < 0.5)) throw Error(ErrorCode::OutOfRange, "radius tolerance must lie in (0, 0.5)");
  // A ring through a critical point or pole cannot carry the property.
  auto passes = [&](double r) {
    try {
      return ring_margin(f, spec, r, grid_angles) > 0.0;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EvaluationError) throw;
      return false;
    }
  };
  // The ring predicate is not monotone in r (z - z^2 fails on (1/4, 1/2) and
  // passes again near 1), so the first failing ring is bracketed outward
  // before bisecting.
  const double top = 1.0 - tol;
  double lo = 0.0;
  double hi = top;
  bool failed = false;
  for (double r = kRadiusScanStep; r < top; r += kRadiusScanStep) {
    if (!passes(r)) {
      hi = r;
      failed = true;
      break;
    }
    lo = r;
  }
  if (!failed) {
    if (passes(top)) return top;
    hi = top;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (passes(mid) ? lo : hi) = mid;
  }
  return lo;
}

FamilyRadius family_property_radius(const std::vector<AnalyticFunction>& family, const ClassSpec& spec,
                                    int grid_angles, double tol) {
  if (family.empty()) throw Error(ErrorCode::BadFamilySpec, "family is empty");
  std::vector<double> radii(family.size());
  parallel_for(family.size(), [&](std::size_t i) { radii[i] = property_radius(family[i], spec, grid_angles, tol); });
  std::size_t best = 0;
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] < radii[best]) best = i;
  return {radii[best], family[best].label()};
}

std::vector<AnalyticFunction> filter_u_and_r(const std::vector<AnalyticFunction>& family, double lambda, double alpha,
                                             const DiskGrid& grid) {
  const ClassSpec u = ClassSpec::u(lambda, alpha);
  const ClassSpec r = ClassSpec::r();
  std::vector<char> keep(family.size(), 0);
  parallel_for(family.size(), [&](std::size_t i) {
    const AnalyticFunction& f = family[i];
    if (f.zero_order() != 1) return;
    keep[i] = check_membership(u, f, grid).verdict == Verdict::Holds &&
              check_membership(r, f, grid).verdict == Verdict::Holds;
  });
  std::vector<AnalyticFunction> out;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (keep[i]) out.push_back(family[i]);
  return out;
}

double psi_estimate_margin(double u, double v, double r, int angles) {
  double lo = std::numeric_limits<double>::infinity();
  for (int k = 0; k < angles; ++k) {
    const cplx z = std::polar(r, 2.0 * kPi * k / angles);
    // psi'/psi = u/(1 + u z) + v/(1 - v z)
    const cplx log_deriv = u / (1.0 + u * z) + v / (1.0 - v * z);
    lo = std::min(lo, (z * log_deriv).real());
  }
  return lo + 2.0 * r / (1.0 - r * r);
}

double phi_estimate_margin(cplx c, double r, int angles) {
  double lo = std::numeric_limits<double>::infinity();
  for (int k = 0; k < angles; ++k) {
    const cplx z = std::polar(r, 2.0 * kPi * k / angles);
    lo = std::min(lo, (z * c / (1.0 + z * c)).real());
  }
  return lo + r / (1.0 - r);
}

}  // namespace gft
