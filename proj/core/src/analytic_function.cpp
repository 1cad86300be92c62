#include "gft/analytic_function.hpp"

#include <cmath>
#include <sstream>

#include "gft/error.hpp"

namespace gft {
namespace {

constexpr double kTagTolerance = 1e-12;

std::string describe(cplx z) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

void require_disk(cplx z) {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::OutOfRange, "point " + describe(z) + " is not in the open unit disk");
}

void validate_tag(const std::vector<cplx>& c, const NormalizationTag& tag) {
  auto coeff = [&](int k) { return k < static_cast<int>(c.size()) ? c[k] : cplx{0.0, 0.0}; };
  if (tag.kind == NormalizationTag::Kind::A) {
    if (tag.p < 1) throw Error(ErrorCode::InvalidInput, "A_p tag needs p >= 1");
    for (int k = 0; k < tag.p; ++k)
      if (std::abs(coeff(k)) > kTagTolerance)
        throw Error(ErrorCode::InvalidInput, "A_p series must vanish to order p");
    if (std::abs(coeff(tag.p) - 1.0) > kTagTolerance)
      throw Error(ErrorCode::InvalidInput, "A_p series needs c_p = 1");
  } else {
    if (tag.n < 1) throw Error(ErrorCode::InvalidInput, "H[a,n] tag needs n >= 1");
    if (std::abs(coeff(0) - tag.a) > kTagTolerance)
      throw Error(ErrorCode::InvalidInput, "H[a,n] series needs c_0 = a");
    for (int k = 1; k < tag.n; ++k)
      if (std::abs(coeff(k)) > kTagTolerance)
        throw Error(ErrorCode::InvalidInput, "H[a,n] series needs c_1..c_{n-1} = 0");
  }
}

// Tag implied by a coefficient list: A_k when the first nonzero coefficient
// sits at k >= 1 and equals 1, otherwise H[c_0, n].
NormalizationTag infer_tag(const std::vector<cplx>& c) {
  std::size_t first = 0;
  while (first < c.size() && c[first] == cplx{0.0, 0.0}) ++first;
  if (first >= 1 && first < c.size() && c[first] == cplx{1.0, 0.0})
    return NormalizationTag::a_class(static_cast<int>(first));
  const cplx a = c.empty() ? cplx{0.0, 0.0} : c[0];
  int n = 1;
  while (n < static_cast<int>(c.size()) && c[n] == cplx{0.0, 0.0}) ++n;
  if (n >= static_cast<int>(c.size())) n = 1;
  return NormalizationTag::h_class(a, n);
}

Jet taylor_jet(const TaylorSeries& s, cplx z) {
  const auto& c = s.coeffs;
  if (c.empty()) return {};
  cplx p = c.back();
  cplx dp{0.0, 0.0};
  cplx ddp{0.0, 0.0};
  for (auto k = static_cast<std::ptrdiff_t>(c.size()) - 2; k >= 0; --k) {
    ddp = ddp * z + dp;
    dp = dp * z + p;
    p = p * z + c[static_cast<std::size_t>(k)];
  }
  return {p, dp, 2.0 * ddp};
}

Jet mobius_jet(const MobiusPowerProduct& m, cplx z) {
  // g = prod (1 + u z)^e with L = g'/g and L' in closed form.
  cplx log_g{0.0, 0.0};
  cplx dlog{0.0, 0.0};
  cplx ddlog{0.0, 0.0};
  for (const auto& [u, e] : m.factors) {
    const cplx w = 1.0 + u * z;
    if (w == cplx{0.0, 0.0}) throw Error(ErrorCode::SingularPoint, "factor 1+uz vanishes at " + describe(z));
    log_g += e * principal_log(w);
    dlog += e * u / w;
    ddlog -= e * u * u / (w * w);
  }
  const cplx g = std::exp(log_g);
  const cplx g1 = g * dlog;
  const cplx g2 = g * (dlog * dlog + ddlog);

  const int q = m.q;
  if (q == 0) return {g, g1, g2};
  if (z == cplx{0.0, 0.0}) {
    if (q < 0) throw Error(ErrorCode::SingularPoint, "pole of z^q at the origin");
    if (q == 1) return {0.0, g, 2.0 * g1};
    if (q == 2) return {0.0, 0.0, 2.0 * g};
    return {0.0, 0.0, 0.0};
  }
  const double qd = q;
  const cplx zq = std::pow(z, q);
  const cplx zq1 = zq / z;
  const cplx zq2 = zq1 / z;
  return {zq * g, qd * zq1 * g + zq * g1, qd * (qd - 1.0) * zq2 * g + 2.0 * qd * zq1 * g1 + zq * g2};
}

}  // namespace

AnalyticFunction AnalyticFunction::taylor(std::vector<cplx> coeffs, NormalizationTag tag) {
  if (coeffs.empty()) throw Error(ErrorCode::InvalidInput, "Taylor series needs at least one coefficient");
  validate_tag(coeffs, tag);
  return AnalyticFunction(TaylorSeries{std::move(coeffs), tag});
}

AnalyticFunction AnalyticFunction::mobius(int q, std::vector<MobiusFactor> factors) {
  for (const auto& f : factors) {
    if (std::abs(f.u) > 1.0 + 1e-15) throw Error(ErrorCode::OutOfRange, "Mobius factor needs |u| <= 1");
    if (!std::isfinite(f.exponent)) throw Error(ErrorCode::InvalidInput, "Mobius exponent must be finite");
  }
  return AnalyticFunction(MobiusPowerProduct{q, std::move(factors)});
}

cplx AnalyticFunction::eval(cplx z, int order) const {
  if (order < 0 || order > 2) throw Error(ErrorCode::OrderOutOfRange, "derivative order must be 0, 1 or 2");
  const Jet j = jet(z);
  return order == 0 ? j.value : order == 1 ? j.d1 : j.d2;
}

Jet AnalyticFunction::jet(cplx z) const {
  require_disk(z);
  if (const auto* s = std::get_if<TaylorSeries>(&rep_)) return taylor_jet(*s, z);
  return mobius_jet(std::get<MobiusPowerProduct>(rep_), z);
}

AnalyticFunction AnalyticFunction::with_label(std::string label) const {
  AnalyticFunction copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

int AnalyticFunction::zero_order() const {
  if (const auto* m = std::get_if<MobiusPowerProduct>(&rep_)) return m->q;
  const auto& c = std::get<TaylorSeries>(rep_).coeffs;
  int k = 0;
  while (k < static_cast<int>(c.size()) && c[k] == cplx{0.0, 0.0}) ++k;
  return k;
}

AnalyticFunction AnalyticFunction::shifted(int shift) const {
  if (shift == 0) return *this;
  if (const auto* m = std::get_if<MobiusPowerProduct>(&rep_)) {
    if (m->q + shift < 0) throw Error(ErrorCode::InvalidInput, "shift would create a pole at the origin");
    return mobius(m->q + shift, m->factors).with_label(label_);
  }
  std::vector<cplx> c = std::get<TaylorSeries>(rep_).coeffs;
  if (shift > 0) {
    c.insert(c.begin(), static_cast<std::size_t>(shift), cplx{0.0, 0.0});
  } else {
    const auto drop = static_cast<std::size_t>(-shift);
    for (std::size_t k = 0; k < drop && k < c.size(); ++k)
      if (c[k] != cplx{0.0, 0.0}) throw Error(ErrorCode::InvalidInput, "shift would create a pole at the origin");
    if (drop >= c.size()) throw Error(ErrorCode::InvalidInput, "shift removes every coefficient");
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(drop));
  }
  const NormalizationTag tag = infer_tag(c);
  return taylor(std::move(c), tag).with_label(label_);
}

cplx eval(const AnalyticFunction& f, cplx z, int order) { return f.eval(z, order); }

AnalyticFunction taylor_from_mobius(const AnalyticFunction& product, int n_terms) {
  if (!product.is_mobius()) throw Error(ErrorCode::InvalidInput, "taylor_from_mobius needs a Mobius power product");
  const auto& m = product.mobius_product();
  if (m.q < 0) throw Error(ErrorCode::InvalidInput, "negative prefactor exponent has no Taylor series");
  if (n_terms <= m.q) throw Error(ErrorCode::InvalidInput, "need more terms than the order of the zero at 0");

  const auto len = static_cast<std::size_t>(n_terms - m.q);
  // Coefficients of L = g'/g = sum e u / (1 + u z) = sum_k [sum e u (-u)^k] z^k.
  std::vector<cplx> l(len, cplx{0.0, 0.0});
  for (const auto& [u, e] : m.factors) {
    cplx term = e * u;
    for (std::size_t k = 0; k < len; ++k) {
      l[k] += term;
      term *= -u;
    }
  }
  std::vector<cplx> g(len, cplx{0.0, 0.0});
  g[0] = 1.0;
  for (std::size_t k = 0; k + 1 < len; ++k) {
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j <= k; ++j) acc += g[j] * l[k - j];
    g[k + 1] = acc / static_cast<double>(k + 1);
  }
  std::vector<cplx> c(static_cast<std::size_t>(m.q), cplx{0.0, 0.0});
  c.insert(c.end(), g.begin(), g.end());
  const NormalizationTag tag = m.q == 0 ? NormalizationTag::h_class(1.0, 1) : NormalizationTag::a_class(m.q);
  return AnalyticFunction::taylor(std::move(c), tag).with_label(product.label());
}

}  // namespace gft
