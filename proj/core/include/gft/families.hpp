#pragma once

#include <cstdint>
#include <vector>

#include "gft/analytic_function.hpp"

namespace gft {

/// ((1 + e^{i m pi} z) / (1 - z))^a as a Mobius power product; maps the disk
/// onto the sector -a(1-m)pi/2 < arg w < a(1+m)pi/2.
/// Throws OutOfRange unless 0 < a <= 1 and -1 < m < 1.
AnalyticFunction sector_map(double a, double m);

enum class FamilyKind { SectorPowers, MobiusRatios, RandomTaylor, Explicit };

/// Generator description for make_family. Sector powers are produced in
/// h-form (h(0) = 1); the other generators produce normalized f = z + ...
struct FunctionFamily {
  FamilyKind kind = FamilyKind::MobiusRatios;
  std::vector<double> a_values;  // sector exponents
  std::vector<double> m_values;  // sector rotations
  std::vector<double> u_values;  // f = z (1 + u z) / (1 - v z)
  std::vector<double> v_values;
  std::uint64_t seed = 7;
  int degree = 10;
  int count = 50;
  double decay = 0.5;  // |c_k| <= decay^(k-1)
  std::vector<AnalyticFunction> functions;

  /// a in {0.25, 0.5, 0.75, 1} x m in {-0.5, 0, 0.5}.
  static FunctionFamily sector_powers();
  static FunctionFamily sector_powers(std::vector<double> a, std::vector<double> m);
  /// u, v in {-0.9, -0.5, 0, 0.5, 0.9}.
  static FunctionFamily mobius_ratios();
  /// u, v in {-0.3, -0.2, ..., 0.3}.
  static FunctionFamily mobius_ratios_fine();
  static FunctionFamily mobius_ratios(std::vector<double> u, std::vector<double> v);
  static FunctionFamily random_taylor(std::uint64_t seed, int degree, int count);
  static FunctionFamily explicit_list(std::vector<AnalyticFunction> functions);
};

/// Deterministic expansion of a generator; every member carries a label with
/// its parameters. Throws BadFamilySpec for empty grids or invalid parameters.
std::vector<AnalyticFunction> make_family(const FunctionFamily& spec);

/// Concatenation of make_family over several generators.
std::vector<AnalyticFunction> make_family(const std::vector<FunctionFamily>& specs);

}  // namespace gft
