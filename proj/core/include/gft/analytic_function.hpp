#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gft/complex_power.hpp"

namespace gft {

/// Value and first two derivatives of a function at one point.
struct Jet {
  cplx value;
  cplx d1;
  cplx d2;
};

/// Normalization of a Taylor series: H[a,n] (f = a + c_n z^n + ...) or
/// A_p (f = z^p + ...).
struct NormalizationTag {
  enum class Kind { H, A };

  Kind kind = Kind::A;
  cplx a{0.0, 0.0};
  int n = 1;
  int p = 1;

  static NormalizationTag h_class(cplx a, int n) { return {Kind::H, a, n, 1}; }
  static NormalizationTag a_class(int p) { return {Kind::A, {0.0, 0.0}, 1, p}; }

  bool operator==(const NormalizationTag&) const = default;
};

struct TaylorSeries {
  std::vector<cplx> coeffs;
  NormalizationTag tag;
};

/// One factor (1 + u z)^exponent, continuous branch equal to 1 at z = 0.
struct MobiusFactor {
  cplx u;
  double exponent;
};

/// z^q * prod (1 + u_k z)^{e_k}, |u_k| <= 1.
struct MobiusPowerProduct {
  int q = 0;
  std::vector<MobiusFactor> factors;
};

/// An analytic test function on the unit disk with exact first and second
/// derivatives. Immutable once built; the factories validate the invariants of
/// each representation.
class AnalyticFunction {
 public:
  /// Throws InvalidInput when the coefficients contradict the tag.
  static AnalyticFunction taylor(std::vector<cplx> coeffs, NormalizationTag tag);
  /// Throws OutOfRange when some |u| > 1.
  static AnalyticFunction mobius(int q, std::vector<MobiusFactor> factors);

  bool is_taylor() const { return std::holds_alternative<TaylorSeries>(rep_); }
  bool is_mobius() const { return std::holds_alternative<MobiusPowerProduct>(rep_); }
  const TaylorSeries& taylor_series() const { return std::get<TaylorSeries>(rep_); }
  const MobiusPowerProduct& mobius_product() const { return std::get<MobiusPowerProduct>(rep_); }

  /// k-th derivative at z, k in {0, 1, 2}.
  cplx eval(cplx z, int order) const;
  Jet jet(cplx z) const;

  /// Free-form identifier used in reports ("mobius u=0.5 v=-0.5", ...).
  const std::string& label() const { return label_; }
  AnalyticFunction with_label(std::string label) const;

  /// Order of the zero at the origin: q for products, index of the first
  /// nonzero coefficient for series.
  int zero_order() const;

  /// Multiply by z^shift (shift may be negative when the result stays
  /// analytic at 0). Used to move between the f = z h and h = f / z roles.
  AnalyticFunction shifted(int shift) const;

 private:
  using Rep = std::variant<TaylorSeries, MobiusPowerProduct>;
  explicit AnalyticFunction(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
  std::string label_;
};

/// Free-function form of AnalyticFunction::eval.
cplx eval(const AnalyticFunction& f, cplx z, int order);

/// First n_terms Taylor coefficients of a product with q >= 0, computed with
/// the logarithmic-derivative recurrence, returned as a TAYLOR function tagged
/// A_q (or H[1,1] when q = 0).
AnalyticFunction taylor_from_mobius(const AnalyticFunction& product, int n_terms);

}  // namespace gft
