#pragma once

#include <complex>
#include <numbers>

namespace gft {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Principal argument in (-pi, pi]. A negative zero imaginary part still maps
/// the negative real axis to +pi.
double principal_arg(cplx w);

/// ln|w| + i Arg w. Throws ZeroBase for w = 0.
cplx principal_log(cplx w);

/// exp(c * Log w) on the principal branch. Throws ZeroBase for w = 0.
cplx principal_power(cplx w, double c);

}  // namespace gft
