#pragma once

#include <cmath>
#include <concepts>

#include "gft/error.hpp"

namespace gft {

enum class Extremum { Min, Max };

template <std::floating_point T>
struct Optimum {
  T x;
  T value;
};

/// Golden-section search for the extremum of a unimodal f on [lo, hi].
/// Stops when the bracket is narrower than tol. The scalar type is generic so
/// oracles can run in long double when the extremizer itself is compared.
template <std::floating_point T, std::invocable<T> F>
Optimum<T> optimize_1d(F&& f, T lo, T hi, Extremum mode, T tol = T(1e-10)) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidBracket, "optimize_1d needs lo < hi");
  if (!(tol > 0)) throw Error(ErrorCode::InvalidBracket, "optimize_1d needs tol > 0");
  const T sign = mode == Extremum::Min ? T(1) : T(-1);
  auto objective = [&](T x) { return sign * static_cast<T>(f(x)); };

  const T inv_phi = (std::sqrt(T(5)) - T(1)) / T(2);
  T a = lo;
  T b = hi;
  T c = b - inv_phi * (b - a);
  T d = a + inv_phi * (b - a);
  T fc = objective(c);
  T fd = objective(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = objective(d);
    }
  }
  const T x = (a + b) / T(2);
  return {x, static_cast<T>(f(x))};
}

/// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign
/// (an endpoint that is exactly zero is returned as is).
template <std::floating_point T, std::invocable<T> F>
T bisect_root(F&& f, T lo, T hi, T tol = T(1e-12)) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidBracket, "bisect_root needs lo < hi");
  T flo = static_cast<T>(f(lo));
  const T fhi = static_cast<T>(f(hi));
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0)) throw Error(ErrorCode::NoSignChange, "bisect_root needs a sign change on the bracket");
  while (hi - lo > tol) {
    const T mid = lo + (hi - lo) / T(2);
    if (mid <= lo || mid >= hi) break;
    const T fm = static_cast<T>(f(mid));
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / T(2);
}

}  // namespace gft
