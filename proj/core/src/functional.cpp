#include "gft/functional.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "gft/error.hpp"

namespace gft {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string where(cplx z) { return "z = " + fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i"; }

cplx safe_div(cplx num, cplx den, const char* factor, cplx z) {
  if (den == cplx{0.0, 0.0})
    throw Error(ErrorCode::DivisionByZeroInFunctional, std::string(factor) + " vanishes at " + where(z));
  return num / den;
}

void require_unit_interval(double alpha, const char* what) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorCode::OutOfRange, std::string(what) + " needs alpha in [0,1]");
}

}  // namespace

FunctionalSpec FunctionalSpec::starlike() { return {FunctionalKind::Starlike}; }
FunctionalSpec FunctionalSpec::convex() { return {FunctionalKind::Convex}; }

FunctionalSpec FunctionalSpec::mixed(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw Error(ErrorCode::OutOfRange, "MIXED needs lambda in [0,1)");
  FunctionalSpec s{FunctionalKind::Mixed};
  s.lambda = lambda;
  return s;
}

FunctionalSpec FunctionalSpec::u_func(double alpha) {
  require_unit_interval(alpha, "U_FUNC");
  FunctionalSpec s{FunctionalKind::UFunc};
  s.alpha = alpha;
  return s;
}

FunctionalSpec FunctionalSpec::slit1(double alpha, double beta) {
  if (!(alpha + beta > 0.0)) throw Error(ErrorCode::DegenerateSum, "SLIT1_LHS needs alpha + beta > 0");
  FunctionalSpec s{FunctionalKind::Slit1Lhs};
  s.alpha = alpha;
  s.beta = beta;
  return s;
}

FunctionalSpec FunctionalSpec::tilted(double lambda) {
  if (!(lambda >= 0.0 && lambda < kPi / 2)) throw Error(ErrorCode::OutOfRange, "TILTED_LHS needs lambda in [0,pi/2)");
  FunctionalSpec s{FunctionalKind::TiltedLhs};
  s.lambda = lambda;
  return s;
}

FunctionalSpec FunctionalSpec::thm3(double gamma, double delta, double alpha, int p) {
  require_unit_interval(alpha, "THM3_LHS");
  if (!(gamma > 0.0) || !(delta > 0.0)) throw Error(ErrorCode::OutOfRange, "THM3_LHS needs gamma, delta > 0");
  if (p < 1) throw Error(ErrorCode::OutOfRange, "THM3_LHS needs p >= 1");
  FunctionalSpec s{FunctionalKind::Thm3Lhs};
  s.gamma = gamma;
  s.delta = delta;
  s.alpha = alpha;
  s.p = p;
  return s;
}

FunctionalSpec FunctionalSpec::two_fn_ratio(double gamma, double delta) {
  if (!(gamma > 0.0) || !(delta > 0.0)) throw Error(ErrorCode::OutOfRange, "TWO_FN_RATIO needs gamma, delta > 0");
  FunctionalSpec s{FunctionalKind::TwoFnRatio};
  s.gamma = gamma;
  s.delta = delta;
  return s;
}

FunctionalSpec FunctionalSpec::two_fn_power(double gamma, double delta, double alpha) {
  require_unit_interval(alpha, "TWO_FN_POWER");
  if (!(gamma > 0.0) || !(delta > 0.0)) throw Error(ErrorCode::OutOfRange, "TWO_FN_POWER needs gamma, delta > 0");
  FunctionalSpec s{FunctionalKind::TwoFnPower};
  s.gamma = gamma;
  s.delta = delta;
  s.alpha = alpha;
  return s;
}

FunctionalSpec FunctionalSpec::arg_sum(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw Error(ErrorCode::OutOfRange, "ARG_SUM needs gamma in (0,1]");
  FunctionalSpec s{FunctionalKind::ArgSum};
  s.gamma = gamma;
  return s;
}

bool FunctionalSpec::needs_second_function() const {
  return kind == FunctionalKind::TwoFnRatio || kind == FunctionalKind::TwoFnPower;
}

std::string FunctionalSpec::to_string() const {
  switch (kind) {
    case FunctionalKind::Starlike: return "STARLIKE";
    case FunctionalKind::Convex: return "CONVEX";
    case FunctionalKind::Mixed: return "MIXED(" + fmt(lambda) + ")";
    case FunctionalKind::UFunc: return "U_FUNC(" + fmt(alpha) + ")";
    case FunctionalKind::Slit1Lhs: return "SLIT1_LHS(" + fmt(alpha) + "," + fmt(beta) + ")";
    case FunctionalKind::TiltedLhs: return "TILTED_LHS(" + fmt(lambda) + ")";
    case FunctionalKind::Thm3Lhs:
      return "THM3_LHS(" + fmt(gamma) + "," + fmt(delta) + "," + fmt(alpha) + "," + std::to_string(p) + ")";
    case FunctionalKind::TwoFnRatio: return "TWO_FN_RATIO(" + fmt(gamma) + "," + fmt(delta) + ")";
    case FunctionalKind::TwoFnPower:
      return "TWO_FN_POWER(" + fmt(gamma) + "," + fmt(delta) + "," + fmt(alpha) + ")";
    case FunctionalKind::ArgSum: return "ARG_SUM(" + fmt(gamma) + ")";
  }
  return "?";
}

FunctionalSpec parse_functional_spec(const std::string& text) {
  std::string name = text;
  std::vector<double> args;
  if (const auto open = text.find('('); open != std::string::npos) {
    const auto close = text.rfind(')');
    if (close == std::string::npos || close < open) throw Error(ErrorCode::InvalidInput, "unbalanced parentheses in '" + text + "'");
    name = text.substr(0, open);
    std::stringstream ss(text.substr(open + 1, close - open - 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        args.push_back(std::stod(item, &used));
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidInput, "bad numeric argument '" + item + "' in '" + text + "'");
      }
    }
  }
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw Error(ErrorCode::InvalidInput, name + " takes " + std::to_string(n) + " argument(s)");
  };
  if (name == "STARLIKE") return need(0), FunctionalSpec::starlike();
  if (name == "CONVEX") return need(0), FunctionalSpec::convex();
  if (name == "MIXED") return need(1), FunctionalSpec::mixed(args[0]);
  if (name == "U_FUNC") return need(1), FunctionalSpec::u_func(args[0]);
  if (name == "SLIT1_LHS") return need(2), FunctionalSpec::slit1(args[0], args[1]);
  if (name == "TILTED_LHS") return need(1), FunctionalSpec::tilted(args[0]);
  if (name == "THM3_LHS") {
    if (args.size() == 3) args.push_back(1.0);
    need(4);
    return FunctionalSpec::thm3(args[0], args[1], args[2], static_cast<int>(args[3]));
  }
  if (name == "TWO_FN_RATIO") return need(2), FunctionalSpec::two_fn_ratio(args[0], args[1]);
  if (name == "TWO_FN_POWER") return need(3), FunctionalSpec::two_fn_power(args[0], args[1], args[2]);
  if (name == "ARG_SUM") return need(1), FunctionalSpec::arg_sum(args[0]);
  throw Error(ErrorCode::InvalidInput, "unknown functional '" + name + "'");
}

cplx evaluate_functional(const FunctionalSpec& spec, const Jet& f, const Jet* g, cplx z) {
  if (z == cplx{0.0, 0.0}) throw Error(ErrorCode::OutOfRange, "functionals are not evaluated at z = 0");
  if (spec.needs_second_function() && g == nullptr)
    throw Error(ErrorCode::MissingSecondFunction, spec.to_string() + " needs a second function g");

  auto starlike = [&] { return z * safe_div(f.d1, f.value, "f", z); };
  auto convex = [&] { return 1.0 + z * safe_div(f.d2, f.d1, "f'", z); };

  switch (spec.kind) {
    case FunctionalKind::Starlike: return starlike();
    case FunctionalKind::Convex: return convex();
    case FunctionalKind::Mixed: return spec.lambda * starlike() + (1.0 - spec.lambda) * convex();
    case FunctionalKind::UFunc: {
      const cplx ratio = safe_div(z, f.value, "f", z);
      return f.d1 * principal_power(ratio, spec.alpha + 1.0);
    }
    case FunctionalKind::Slit1Lhs: {
      if (f.value == cplx{0.0, 0.0})
        throw Error(ErrorCode::DivisionByZeroInFunctional, "h vanishes at " + where(z));
      return principal_power(f.value, 2.0 / (spec.alpha + spec.beta)) + z * f.d1 / f.value;
    }
    case FunctionalKind::TiltedLhs: {
      const cplx log_deriv = z * safe_div(f.d1, f.value, "h", z);
      return std::polar(1.0, -spec.lambda) * f.value + log_deriv;
    }
    case FunctionalKind::Thm3Lhs: {
      const cplx s = starlike();
      const cplx c = convex();
      const cplx u = f.d1 * principal_power(z / f.value, spec.alpha + 1.0);
      return spec.gamma * u + spec.delta * (c - (spec.alpha + 1.0) * s + spec.alpha);
    }
    case FunctionalKind::TwoFnRatio: {
      const cplx ratio = z * safe_div(f.d1, g->value, "g", z);
      const cplx gs = z * g->d1 / g->value;
      return spec.gamma * ratio + spec.delta * (convex() - gs);
    }
    case FunctionalKind::TwoFnPower: {
      // z f'/(f^(1-a) g^a) = (z f'/f) (f/g)^a, with (f/g)^a on the principal branch.
      const cplx s = starlike();
      const cplx quotient = safe_div(f.value, g->value, "g", z);
      const cplx head = s * principal_power(quotient, spec.alpha);
      const cplx gs = z * g->d1 / g->value;
      return spec.gamma * head + spec.delta * (convex() - (1.0 - spec.alpha) * s - spec.alpha * gs);
    }
    case FunctionalKind::ArgSum: {
      const cplx h2 = f.value * f.value;
      const cplx inner = 1.0 + z * safe_div(f.d1, h2, "h", z);
      if (inner == cplx{0.0, 0.0})
        throw Error(ErrorCode::DivisionByZeroInFunctional, "1 + z h'/h^2 vanishes at " + where(z));
      return {principal_arg(f.value) + spec.gamma * principal_arg(inner), 0.0};
    }
  }
  return {};
}

cplx evaluate_functional(const FunctionalSpec& spec, const AnalyticFunction& f, const AnalyticFunction* g,
                         cplx z) {
  if (spec.needs_second_function() && g == nullptr)
    throw Error(ErrorCode::MissingSecondFunction, spec.to_string() + " needs a second function g");
  const Jet jf = f.jet(z);
  if (g == nullptr) return evaluate_functional(spec, jf, nullptr, z);
  const Jet jg = g->jet(z);
  return evaluate_functional(spec, jf, &jg, z);
}

}  // namespace gft
