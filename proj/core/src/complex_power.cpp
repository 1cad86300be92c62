#include "gft/complex_power.hpp"

#include <cmath>

#include "gft/error.hpp"

namespace gft {

double principal_arg(cplx w) {
  const double a = std::atan2(w.imag(), w.real());
  return a == -kPi ? kPi : a;
}

cplx principal_log(cplx w) {
  if (w == cplx{0.0, 0.0}) throw Error(ErrorCode::ZeroBase, "logarithm of zero");
  return {std::log(std::abs(w)), principal_arg(w)};
}

cplx principal_power(cplx w, double c) {
  if (w == cplx{0.0, 0.0}) throw Error(ErrorCode::ZeroBase, "principal power with zero base");
  if (c == 0.0) return {1.0, 0.0};
  if (c == 1.0) return w;
  return std::exp(c * principal_log(w));
}

}  // namespace gft
