#include "gft/families.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "gft/error.hpp"

namespace gft {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Fixed mapping from 64 random bits to [0, 1), independent of the standard
// library's distribution implementations.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<double> steps(double lo, double step, int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(std::round((lo + step * k) * 1e12) / 1e12);
  return out;
}

}  // namespace

AnalyticFunction sector_map(double a, double m) {
  if (!(a > 0.0 && a <= 1.0)) throw Error(ErrorCode::OutOfRange, "sector_map needs 0 < a <= 1");
  if (!(m > -1.0 && m < 1.0)) throw Error(ErrorCode::OutOfRange, "sector_map needs -1 < m < 1");
  return AnalyticFunction::mobius(0, {{std::polar(1.0, m * kPi), a}, {cplx{-1.0, 0.0}, -a}})
      .with_label("sector a=" + fmt(a) + " m=" + fmt(m));
}

FunctionFamily FunctionFamily::sector_powers() { return sector_powers({0.25, 0.5, 0.75, 1.0}, {-0.5, 0.0, 0.5}); }

FunctionFamily FunctionFamily::sector_powers(std::vector<double> a, std::vector<double> m) {
  FunctionFamily f;
  f.kind = FamilyKind::SectorPowers;
  f.a_values = std::move(a);
  f.m_values = std::move(m);
  return f;
}

FunctionFamily FunctionFamily::mobius_ratios() {
  return mobius_ratios({-0.9, -0.5, 0.0, 0.5, 0.9}, {-0.9, -0.5, 0.0, 0.5, 0.9});
}

FunctionFamily FunctionFamily::mobius_ratios_fine() { return mobius_ratios(steps(-0.3, 0.1, 7), steps(-0.3, 0.1, 7)); }

FunctionFamily FunctionFamily::mobius_ratios(std::vector<double> u, std::vector<double> v) {
  FunctionFamily f;
  f.kind = FamilyKind::MobiusRatios;
  f.u_values = std::move(u);
  f.v_values = std::move(v);
  return f;
}

FunctionFamily FunctionFamily::random_taylor(std::uint64_t seed, int degree, int count) {
  FunctionFamily f;
  f.kind = FamilyKind::RandomTaylor;
  f.seed = seed;
  f.degree = degree;
  f.count = count;
  return f;
}

FunctionFamily FunctionFamily::explicit_list(std::vector<AnalyticFunction> functions) {
  FunctionFamily f;
  f.kind = FamilyKind::Explicit;
  f.functions = std::move(functions);
  return f;
}

std::vector<AnalyticFunction> make_family(const FunctionFamily& spec) {
  std::vector<AnalyticFunction> out;
  switch (spec.kind) {
    case FamilyKind::SectorPowers:
      if (spec.a_values.empty() || spec.m_values.empty()) throw Error(ErrorCode::BadFamilySpec, "empty sector grid");
      for (double a : spec.a_values)
        for (double m : spec.m_values) {
          try {
            out.push_back(sector_map(a, m));
          } catch (const Error& e) {
            throw Error(ErrorCode::BadFamilySpec, e.what());
          }
        }
      break;
    case FamilyKind::MobiusRatios:
      if (spec.u_values.empty() || spec.v_values.empty()) throw Error(ErrorCode::BadFamilySpec, "empty Mobius grid");
      for (double u : spec.u_values)
        for (double v : spec.v_values) {
          if (std::abs(u) > 1.0 || std::abs(v) > 1.0) throw Error(ErrorCode::BadFamilySpec, "Mobius parameters need |u|, |v| <= 1");
          out.push_back(AnalyticFunction::mobius(1, {{cplx{u, 0.0}, 1.0}, {cplx{-v, 0.0}, -1.0}})
                            .with_label("mobius u=" + fmt(u) + " v=" + fmt(v)));
        }
      break;
    case FamilyKind::RandomTaylor: {
      if (spec.degree < 1 || spec.count < 1 || !(spec.decay > 0.0 && spec.decay < 1.0))
        throw Error(ErrorCode::BadFamilySpec, "random Taylor family needs degree >= 1, count >= 1, decay in (0, 1)");
      std::mt19937_64 rng(spec.seed);
      for (int i = 0; i < spec.count; ++i) {
        std::vector<cplx> c(static_cast<std::size_t>(spec.degree) + 1, cplx{0.0, 0.0});
        c[1] = 1.0;
        for (int k = 2; k <= spec.degree; ++k) {
          const double r = unit(rng) * std::pow(spec.decay, k - 1);
          const double t = 2.0 * kPi * unit(rng);
          c[static_cast<std::size_t>(k)] = std::polar(r, t);
        }
        out.push_back(AnalyticFunction::taylor(std::move(c), NormalizationTag::a_class(1))
                          .with_label("taylor seed=" + std::to_string(spec.seed) + " index=" + std::to_string(i)));
      }
      break;
    }
    case FamilyKind::Explicit:
      if (spec.functions.empty()) throw Error(ErrorCode::BadFamilySpec, "explicit family is empty");
      for (std::size_t i = 0; i < spec.functions.size(); ++i) {
        const auto& f = spec.functions[i];
        out.push_back(f.label().empty() ? f.with_label("explicit " + std::to_string(i)) : f);
      }
      break;
  }
  return out;
}

std::vector<AnalyticFunction> make_family(const std::vector<FunctionFamily>& specs) {
  std::vector<AnalyticFunction> out;
  for (const auto& s : specs) {
    auto part = make_family(s);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace gft
