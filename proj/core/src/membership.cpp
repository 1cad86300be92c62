#include "gft/membership.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

#include "gft/error.hpp"
#include "gft/functional.hpp"

namespace gft {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::OutOfRange, what);
}

double sector_slack(cplx w, double alpha, double beta) {
  if (w == cplx{0.0, 0.0}) throw Error(ErrorCode::EvaluationError, "argument undefined where the value vanishes");
  const double a = principal_arg(w);
  return std::min(alpha * kPi / 2 - a, a + beta * kPi / 2);
}

double evaluate_slack(const ClassSpec& spec, const AnalyticFunction& f, cplx z) {
  switch (spec.kind) {
    case ClassKind::G:
      return sector_slack(f.eval(z, 0), spec.alpha, spec.beta);
    case ClassKind::PTilt:
      return (std::polar(1.0, spec.lambda) * f.eval(z, 0)).real();
    case ClassKind::U:
      return spec.lambda - std::abs(evaluate_functional(FunctionalSpec::u_func(spec.alpha), f, nullptr, z) - 1.0);
    case ClassKind::R:
      return (f.eval(z, 0) / z).real();
    case ClassKind::Starlike:
      return evaluate_functional(FunctionalSpec::starlike(), f, nullptr, z).real();
    case ClassKind::Convex:
      return evaluate_functional(FunctionalSpec::convex(), f, nullptr, z).real();
    case ClassKind::StronglyStarlike:
      return sector_slack(evaluate_functional(FunctionalSpec::starlike(), f, nullptr, z), spec.alpha, spec.alpha);
    case ClassKind::MAlpha: {
      const Jet j = f.jet(z);
      const cplx s = evaluate_functional(FunctionalSpec::starlike(), j, nullptr, z);
      const cplx c = evaluate_functional(FunctionalSpec::convex(), j, nullptr, z);
      return (spec.alpha * c + (1.0 - spec.alpha) * s).real();
    }
  }
  return 0.0;
}

}  // namespace

ClassSpec ClassSpec::g(double alpha, double beta) {
  require(alpha > -1.0 && alpha <= 1.0 && beta > -1.0 && beta <= 1.0, "G needs alpha, beta in (-1, 1]");
  return {ClassKind::G, alpha, beta, 0.0};
}

ClassSpec ClassSpec::p_tilt(double lambda) {
  require(std::isfinite(lambda), "P_TILT needs a finite lambda");
  return {ClassKind::PTilt, 0.0, 0.0, lambda};
}

ClassSpec ClassSpec::u(double lambda, double alpha) {
  require(lambda > 0.0 && lambda <= 1.0 && alpha > 0.0 && alpha <= 1.0, "U needs lambda, alpha in (0, 1]");
  return {ClassKind::U, alpha, 0.0, lambda};
}

ClassSpec ClassSpec::r() { return {ClassKind::R}; }
ClassSpec ClassSpec::starlike() { return {ClassKind::Starlike}; }
ClassSpec ClassSpec::convex() { return {ClassKind::Convex}; }

ClassSpec ClassSpec::strongly_starlike(double alpha) {
  require(alpha > 0.0 && alpha <= 1.0, "STRONGLY_STARLIKE needs alpha in (0, 1]");
  return {ClassKind::StronglyStarlike, alpha, alpha, 0.0};
}

ClassSpec ClassSpec::m_alpha(double alpha) {
  require(alpha >= 0.0 && std::isfinite(alpha), "M_ALPHA needs alpha >= 0");
  return {ClassKind::MAlpha, alpha, 0.0, 0.0};
}

std::string ClassSpec::to_string() const {
  switch (kind) {
    case ClassKind::G: return "G(" + fmt(alpha) + "," + fmt(beta) + ")";
    case ClassKind::PTilt: return "P_TILT(" + fmt(lambda) + ")";
    case ClassKind::U: return "U(" + fmt(lambda) + "," + fmt(alpha) + ")";
    case ClassKind::R: return "R";
    case ClassKind::Starlike: return "STARLIKE";
    case ClassKind::Convex: return "CONVEX";
    case ClassKind::StronglyStarlike: return "STRONGLY_STARLIKE(" + fmt(alpha) + ")";
    case ClassKind::MAlpha: return "M_ALPHA(" + fmt(alpha) + ")";
  }
  return "?";
}

ClassSpec parse_class_spec(const std::string& text) {
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
        args.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidInput, "bad numeric argument '" + item + "' in '" + text + "'");
      }
    }
  }
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw Error(ErrorCode::InvalidInput, name + " takes " + std::to_string(n) + " argument(s)");
  };
  if (name == "G") return need(2), ClassSpec::g(args[0], args[1]);
  if (name == "P_TILT") return need(1), ClassSpec::p_tilt(args[0]);
  if (name == "U") return need(2), ClassSpec::u(args[0], args[1]);
  if (name == "R") return need(0), ClassSpec::r();
  if (name == "STARLIKE") return need(0), ClassSpec::starlike();
  if (name == "CONVEX") return need(0), ClassSpec::convex();
  if (name == "STRONGLY_STARLIKE") return need(1), ClassSpec::strongly_starlike(args[0]);
  if (name == "M_ALPHA") return need(1), ClassSpec::m_alpha(args[0]);
  throw Error(ErrorCode::InvalidInput, "unknown class '" + name + "'");
}

double class_slack(const ClassSpec& spec, const AnalyticFunction& f, cplx z) {
  const double s = evaluate_slack(spec, f, z);
  if (!std::isfinite(s)) throw Error(ErrorCode::EvaluationError, "non-finite value");
  return s;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Fails: return "FAILS";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

MembershipReport check_membership(const ClassSpec& spec, const AnalyticFunction& f, const DiskGrid& grid, double eps) {
  MembershipReport rep;
  rep.margin = std::numeric_limits<double>::infinity();
  for (cplx z : grid.points()) {
    double s = 0.0;
    try {
      s = class_slack(spec, f, z);
    } catch (const Error& e) {
      rep.verdict = Verdict::Undecided;
      rep.margin = std::numeric_limits<double>::quiet_NaN();
      rep.witness = z;
      rep.error = e.what();
      return rep;
    }
    ++rep.samples_checked;
    if (s < rep.margin) {
      rep.margin = s;
      rep.witness = z;
    }
  }
  rep.verdict = rep.margin >= eps ? Verdict::Holds : Verdict::Fails;
  return rep;
}

double distance_to_ray(cplx w, const Ray& ray) {
  const double s = ray.direction == RayDirection::Up ? 1.0 : -1.0;
  const cplx d = w - ray.anchor;
  const double t = std::max(d.imag() * s, 0.0);
  return std::abs(d - cplx{0.0, t * s});
}

double distance_to_slit(cplx w, const SlitSpec& slit) {
  double best = std::numeric_limits<double>::infinity();
  for (const Ray& r : slit.rays) best = std::min(best, distance_to_ray(w, r));
  return best;
}

SlitCheck slit_avoidance(std::span<const cplx> values, const SlitSpec& slit, double eps) {
  SlitCheck out;
  out.min_distance = std::numeric_limits<double>::infinity();
  for (cplx w : values) {
    const double d = distance_to_slit(w, slit);
    if (d < out.min_distance) {
      out.min_distance = d;
      out.witness = w;
    }
  }
  out.avoided = out.min_distance > eps;
  return out;
}

bool ring_crosses_slit(std::span<const cplx> ring, const SlitSpec& slit) {
  const std::size_t n = ring.size();
  if (n < 2) return false;
  for (const Ray& ray : slit.rays) {
    const double s = ray.direction == RayDirection::Up ? 1.0 : -1.0;
    const double x0 = ray.anchor.real();
    for (std::size_t k = 0; k < n; ++k) {
      const cplx a = ring[k];
      const cplx b = ring[(k + 1) % n];
      const double da = a.real() - x0;
      const double db = b.real() - x0;
      if (da * db > 0.0 || da == db) continue;
      const double t = da / (da - db);
      const double y = a.imag() + t * (b.imag() - a.imag());
      if ((y - ray.anchor.imag()) * s >= 0.0) return true;
    }
  }
  return false;
}

RegionCheck region_containment(std::span<const cplx> values, const RegionSpec& region, double eps) {
  RegionCheck out;
  out.margin = std::numeric_limits<double>::infinity();
  for (cplx w : values) {
    const double s = region.slack(w);
    if (s < out.margin) {
      out.margin = s;
      out.witness = w;
    }
  }
  out.contained = out.margin >= eps;
  return out;
}

}  // namespace gft
