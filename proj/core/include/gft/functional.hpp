#pragma once

#include <string>

#include "gft/analytic_function.hpp"

namespace gft {

enum class FunctionalKind {
  Starlike,    // z f'/f
  Convex,      // 1 + z f''/f'
  Mixed,       // lambda z f'/f + (1 - lambda)(1 + z f''/f')
  UFunc,       // f' (z/f)^(alpha+1)
  Slit1Lhs,    // h^(2/(alpha+beta)) + z h'/h
  TiltedLhs,   // e^(-i lambda) h + z h'/h
  Thm3Lhs,     // gamma U + delta (1 + z f''/f' - (alpha+1) z f'/f + alpha)
  TwoFnRatio,  // gamma z f'/g + delta (1 + z f''/f' - z g'/g)
  TwoFnPower,  // gamma z f'/(f^(1-alpha) g^alpha) + delta (1 + z f''/f' - (1-alpha) z f'/f - alpha z g'/g)
  ArgSum,      // Arg h + gamma Arg(1 + z h'/h^2)
};

/// Selector plus parameters for one differential expression. Use the named
/// factories; they enforce the parameter ranges.
struct FunctionalSpec {
  FunctionalKind kind = FunctionalKind::Starlike;
  double lambda = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  int p = 1;

  static FunctionalSpec starlike();
  static FunctionalSpec convex();
  static FunctionalSpec mixed(double lambda);
  static FunctionalSpec u_func(double alpha);
  static FunctionalSpec slit1(double alpha, double beta);
  static FunctionalSpec tilted(double lambda);
  static FunctionalSpec thm3(double gamma, double delta, double alpha, int p = 1);
  static FunctionalSpec two_fn_ratio(double gamma, double delta);
  static FunctionalSpec two_fn_power(double gamma, double delta, double alpha);
  static FunctionalSpec arg_sum(double gamma);

  bool needs_second_function() const;
  /// Canonical text form, e.g. "MIXED(0.5)"; parse_functional_spec reads it back.
  std::string to_string() const;
};

/// Inverse of FunctionalSpec::to_string. Throws InvalidInput.
FunctionalSpec parse_functional_spec(const std::string& text);

/// Evaluates the selected expression from precomputed jets of f (and g).
/// ArgSum returns a real number with zero imaginary part.
/// Throws OutOfRange for z = 0, DivisionByZeroInFunctional naming the factor
/// that vanished, MissingSecondFunction when g is required but absent.
cplx evaluate_functional(const FunctionalSpec& spec, const Jet& f, const Jet* g, cplx z);

cplx evaluate_functional(const FunctionalSpec& spec, const AnalyticFunction& f, const AnalyticFunction* g,
                         cplx z);

}  // namespace gft
