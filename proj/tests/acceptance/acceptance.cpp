// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "gft/constants.hpp"
#include "gft/disk_grid.hpp"
#include "gft/error.hpp"
#include "gft/families.hpp"
#include "gft/optimize.hpp"
#include "gft/radius.hpp"
#include "gft/theorem_verify.hpp"
#include "oracles.hpp"

using gft::cplx;
using gft::kPi;

namespace {

// Collects the failures of one criterion; the first few are printed.
struct Check {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: got %.17g want %.17g (tol %.1e)", what.c_str(), got, want, tol);
    expect(std::abs(got - want) <= tol, buf);
  }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

int report(const char* id, const char* title, const std::function<void(Check&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = c.failures.empty();
  std::printf("[%s] %s %s (%zu checks, %zu failed, %.1fs)\n", ok ? "PASS" : "FAIL", id, title, c.checks,
              c.failures.size(), secs);
  for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::printf("       %s\n", c.failures[i].c_str());
  if (c.failures.size() > 10) std::printf("       ... %zu more\n", c.failures.size() - 10);
  std::fflush(stdout);
  return ok ? 0 : 1;
}

void exact_constants(Check& c) {
  c.near(gft::c_lambda(0.0), std::sqrt(3.0), 1e-12, "C(0)");
  c.near(gft::radius_convexity(1, 0), (std::sqrt(17.0) - 3.0) / 4.0, 1e-12, "R_conv(1,0)");
  for (double a : {0.0, 0.25, 0.5, 0.75, 1.0})
    c.near(gft::radius_convexity(1, a), (-(3.0 + 2.0 * a) + std::sqrt(17.0 + 12.0 * a + 4.0 * a * a)) / 4.0, 1e-12,
           fmt("R_conv(1,%g)", a));
  for (int k = 0; k <= 10; ++k) {
    const double l = 0.1 + 0.09 * k;
    c.near(gft::radius_convexity(l, 1.0), gft::radius_inv_alpha_convexity(l, 1.0), 1e-13, fmt("R(%g,1)", l));
  }
}

void oracle_equivalence(Check& c) {
  using gft::Extremum;
  const std::vector<double> slit_grid = {-0.5, 0.1, 0.25, 0.5, 0.75, 1.0};
  for (double a : slit_grid)
    for (double b : slit_grid) {
      if (!(a + b > 0.0) || std::abs(std::cos(oracle::eta(a, b))) < 1e-9) continue;
      for (int n : {1, 2, 3}) {
        const double xs = gft::slit_minimizer(a, b, n);
        const auto s = gft::slit_constants(a, b, n);
        const double scale = (a + b) * n * std::cos(gft::eta(a, b)) / 2;
        const double bound[2] = {-s.rays[0].anchor.imag(), s.rays[1].anchor.imag()};
        for (int branch : {1, 2}) {
          const auto o = gft::optimize_1d(
              [&](long double x) { return oracle::slit_objective(x, a, b, n, branch == 1 ? -1 : 1); }, 1e-3L, 50.0L,
              Extremum::Min, 1e-12L);
          const std::string tag = fmt("slit (%g,%g,", a, b) + std::to_string(n) + ") branch " + std::to_string(branch);
          c.near(static_cast<double>(o.x), xs, 1e-8, tag + " minimizer");
          c.near(scale * static_cast<double>(o.value), bound[branch - 1], 1e-8 * std::max(1.0, bound[branch - 1]),
                 tag + " bound");
        }
      }
    }
  for (double l = 0.0; l < kPi / 2 - 0.01; l += 0.05) {
    const double xs = gft::tilt_minimizer(l);
    for (int sign : {-1, 1}) {
      const auto o = gft::optimize_1d([&](long double x) { return oracle::tilt_objective(x, l, sign); }, 1e-3L, 20.0L,
                                      Extremum::Min, 1e-12L);
      c.near(static_cast<double>(o.x), xs, 1e-8, fmt("tilt minimizer lambda=%g", l));
      c.near(static_cast<double>(o.value) - (sign + 1) * std::tan(l), gft::a_min(l), 1e-8, fmt("A_min(%g)", l));
    }
  }
  const std::vector<double> arg_grid = {0.1, 0.25, 0.5, 0.75, 0.9};
  for (double a : arg_grid)
    for (double b : arg_grid) {
      const auto k = gft::arg_theorem_constants(a, b, 1.0);
      for (int j : {1, 2}) {
        const auto o = gft::optimize_1d([&](long double x) { return oracle::n_branch(x, a, b, j); }, 1e-3L, 100.0L,
                                        Extremum::Max, 1e-12L);
        const std::string tag = fmt("N_%g(%g,%g)", j, a, b);
        c.near(static_cast<double>(o.x), j == 1 ? k.x_star1 : k.x_star2, 1e-8, tag + " maximizer");
        c.near(static_cast<double>(o.value), j == 1 ? k.M1 : k.M2, 1e-8, tag + " maximum");
      }
    }
  for (double l : {0.1, 0.25, 0.5, 0.75, 1.0})
    for (double a : {0.1, 0.25, 0.5, 0.75, 1.0}) {
      const double p = gft::bisect_root([&](long double r) { return oracle::conv_poly(r, l, a); }, 0.0L, 1.0L, 1e-15L);
      const double q = gft::bisect_root([&](long double r) { return oracle::inv_poly(r, l, a); }, 0.0L, 1.0L, 1e-15L);
      c.near(gft::radius_convexity(l, a), p, 1e-10, fmt("P root (%g,%g)", l, a));
      c.near(gft::radius_inv_alpha_convexity(l, a), q, 1e-10, fmt("Q root (%g,%g)", l, a));
    }
}

void reduction_identities(Check& c) {
  for (int k = 1; k <= 19; ++k) {
    const double a = 0.05 * k;
    const auto s = gft::slit_constants(a, a, 1);
    c.expect(s.rays[0].anchor.real() == 0.0 && s.rays[1].anchor.real() == 0.0, fmt("anchors of (%g,%g,1) on Re = 0", a, a));
    const double y = s.rays[1].anchor.imag(), want = gft::c_lambda(1.0 - a);
    c.near(y, want, 4 * std::numeric_limits<double>::epsilon() * want, fmt("y2_min(%g,%g,1) = C(1-a)", a, a));
    c.near(-s.rays[0].anchor.imag(), want, 4 * std::numeric_limits<double>::epsilon() * want, fmt("y1_max(%g)", a));
  }
  const auto t = gft::thm3_constants(1, 1, 1, 0);
  c.expect(t.x == 0.0, "thm3(1,1,1,0) x = 0");
  c.near(t.y_min, std::sqrt(3.0), 1e-15, "thm3(1,1,1,0) y_min");
  c.expect(t.slit.rays[0].direction == gft::RayDirection::Up && t.slit.rays[1].direction == gft::RayDirection::Down,
           "thm3 slit directions");
  c.near(t.slit.rays[1].anchor.imag(), -std::sqrt(3.0), 1e-15, "thm3 lower anchor");
  for (int k = 1; k <= 9; ++k)
    for (double g : {0.1, 0.25, 0.5, 0.75, 1.0}) {
      const double a = 0.1 * k;
      c.near(gft::arg_theorem_constants(a, a, g).delta2, gft::strong_orders(a, g).delta, 1e-12,
             fmt("delta2(%g,%g,%g)", a, a, g));
    }
}

void sector_images(Check& c) {
  const auto grid = gft::DiskGrid::default_profile();
  const std::size_t outer = grid.ring_count() - 1;
  for (double a : {0.25, 0.5, 0.75, 1.0})
    for (double m : {-0.5, 0.0, 0.5}) {
      const auto h = gft::sector_map(a, m);
      const double lo_bound = -a * (1 - m) * kPi / 2, hi_bound = a * (1 + m) * kPi / 2;
      double lo = INFINITY, hi = -INFINITY, ring_lo = INFINITY, ring_hi = -INFINITY;
      for (std::size_t i = 0; i < grid.ring_count(); ++i)
        for (int k = 0; k < grid.angles_per_ring(); ++k) {
          const double arg = std::arg(h.eval(grid.point(i, k), 0));
          lo = std::min(lo, arg);
          hi = std::max(hi, arg);
          if (i == outer) {
            ring_lo = std::min(ring_lo, arg);
            ring_hi = std::max(ring_hi, arg);
          }
        }
      const std::string tag = fmt("sector a=%g m=%g", a, m);
      c.expect(lo >= lo_bound && hi <= hi_bound, tag + ": arg range leaves the sector");
      c.near(ring_lo, lo_bound, 0.01, tag + " lower endpoint at r=0.995");
      c.near(ring_hi, hi_bound, 0.01, tag + " upper endpoint at r=0.995");
    }
}

void tilt_lemma(Check& c) {
  const auto grid = gft::DiskGrid::default_profile();
  for (double b : {0.0, 0.25, 0.5, 0.75, 1.0})
    for (int k = -9; k <= 9; ++k) {
      const double m = 0.1 * k;
      if (std::abs(b * std::cos(m * kPi) + 1.0) < 1e-14) continue;
      const auto r = gft::verify_lemma_tilt(b, m, grid);
      c.expect(r.verdict == gft::Verdict::Holds && r.margin >= 0.0,
               fmt("tilt lemma b=%g m=%g margin=%.3e", b, m, r.margin));
    }
}

void implication_scans(Check& c) {
  const auto grid = gft::DiskGrid::default_profile();
  std::vector<gft::TheoremCase> cases;
  for (gft::CaseId id : gft::all_cases()) cases.push_back(gft::TheoremCase::defaults(id));
  gft::TheoremCase half = gft::TheoremCase::defaults(gft::CaseId::C38);
  half.params.region = gft::RegionKind::HalfPlane;
  half.params.lambda = kPi / 6;
  cases.push_back(half);
  for (const auto& tc : cases) {
    const auto rep = gft::verify_theorem(tc, gft::default_family(tc.id), grid);
    std::string tag(gft::to_string(tc.id));
    if (tc.id == gft::CaseId::C38) tag += tc.params.region == gft::RegionKind::Disk ? "(DISK)" : "(HALF_PLANE)";
    std::printf("       %-16s members=%zu hypothesis_holds=%zu errors=%zu counterexamples=%zu %.1fs\n", tag.c_str(),
                rep.cases_total, rep.hypothesis_holds_count, rep.evaluation_errors, rep.conclusion_failures.size(),
                rep.elapsed_seconds);
    c.expect(rep.conclusion_failures.empty(),
             tag + ": counterexample " +
                 (rep.conclusion_failures.empty() ? std::string() : rep.conclusion_failures.front().function_id));
    c.expect(rep.hypothesis_holds_count >= 1, tag + ": vacuous (no member satisfies the hypothesis)");
  }
}

void proof_estimates(Check& c) {
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int k = 1; k <= 9; ++k) {
        const double u = 0.25 * i, v = 0.25 * j, r = 0.1 * k;
        const double m = gft::psi_estimate_margin(u, v, r);
        c.expect(m >= -1e-9, fmt("psi estimate u=%g v=%g margin %.3e", u, v, m) + fmt(" r=%g", r));
      }
  for (double rho : {0.0, 0.25, 0.5, 0.75, 1.0})
    for (int t = 0; t < 16; ++t)
      for (int k = 1; k <= 9; ++k) {
        const cplx cst = std::polar(rho, 2.0 * kPi * t / 16);
        const double m = gft::phi_estimate_margin(cst, 0.1 * k);
        c.expect(m >= -1e-9, fmt("phi estimate |c|=%g r=%g margin %.3e", rho, 0.1 * k, m));
      }
}

void numerical_hygiene(Check& c) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> rad(0.05, 0.9), ang(0.0, 2.0 * kPi);
  const std::vector<gft::AnalyticFunction> fns = {
      gft::AnalyticFunction::mobius(1, {{cplx{-1.0, 0.0}, -1.0}}),
      gft::AnalyticFunction::mobius(1, {{cplx{0.5, 0.2}, 1.0}, {cplx{-0.3, 0.4}, -1.5}}),
      gft::sector_map(0.75, 0.5),
  };
  const double h = 1e-6;
  for (const auto& f : fns)
    for (int i = 0; i < 200; ++i) {
      const cplx z = std::polar(rad(rng), ang(rng));
      const gft::Jet j = f.jet(z);
      const cplx d1 = (f.eval(z + h, 0) - f.eval(z - h, 0)) / (2 * h);
      const cplx d2 = (f.eval(z + h, 1) - f.eval(z - h, 1)) / (2 * h);
      c.expect(std::abs(d1 - j.d1) <= 1e-6 * std::max(1.0, std::abs(j.d1)), "f' vs difference for " + f.label());
      c.expect(std::abs(d2 - j.d2) <= 1e-6 * std::max(1.0, std::abs(j.d2)), "f'' vs difference for " + f.label());
    }
  double prev = gft::c_lambda(0.0);
  for (int k = 1; k < 100; ++k) {
    const double l = 0.99 * k / 99.0, cur = gft::c_lambda(l);
    c.expect(cur < prev, fmt("C not decreasing at lambda=%g", l));
    prev = cur;
  }
}

}  // namespace

int main() {
  int failed = 0;
  failed += report("AC1", "exact constants", exact_constants);
  failed += report("AC2", "closed forms agree with golden-section and bisection oracles", oracle_equivalence);
  failed += report("AC3", "reduction identities", reduction_identities);
  failed += report("AC4", "sector map arg ranges and endpoints at r = 0.995", sector_images);
  failed += report("AC5", "tilted half-plane lemma", tilt_lemma);
  failed += report("AC6", "implication scans: no counterexamples, non-vacuous", implication_scans);
  failed += report("AC7", "proof estimate lower bounds", proof_estimates);
  failed += report("AC8", "derivatives vs finite differences, C(lambda) monotone", numerical_hygiene);
  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
