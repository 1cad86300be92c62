#include "gft/theorem_verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "gft/error.hpp"
#include "gft/functional.hpp"
#include "gft/parallel.hpp"

namespace gft {
namespace {

constexpr std::array<std::string_view, 16> kNames = {"T31", "C32", "C33",  "T34", "C35",  "T35", "C37I", "C37II",
                                                     "C38", "T39", "C310", "C311", "T41", "C42",  "T43",  "C44"};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::OutOfRange, what);
}

SlitSpec imaginary_slit(double a) {
  return SlitSpec{{Ray{cplx{0.0, a}, RayDirection::Up}, Ray{cplx{0.0, -a}, RayDirection::Down}}};
}

double sector_slack(cplx w, double alpha, double beta) {
  if (w == cplx{0.0, 0.0}) throw Error(ErrorCode::EvaluationError, "argument undefined where the value vanishes");
  const double a = principal_arg(w);
  return std::min(alpha * kPi / 2 - a, a + beta * kPi / 2);
}

cplx starlike(const Jet& f, cplx z) { return evaluate_functional(FunctionalSpec::starlike(), f, nullptr, z); }
cplx convex(const Jet& f, cplx z) { return evaluate_functional(FunctionalSpec::convex(), f, nullptr, z); }

// (1 - gamma) Arg(zf'/f) + gamma Arg(1 + zf''/f').
double weighted_arg(const Jet& f, cplx z, double gamma) {
  const cplx s = starlike(f, z);
  const cplx c = convex(f, z);
  if (s == cplx{0.0, 0.0} || c == cplx{0.0, 0.0})
    throw Error(ErrorCode::EvaluationError, "argument undefined where the value vanishes");
  return (1.0 - gamma) * principal_arg(s) + gamma * principal_arg(c);
}

// Everything a case needs, resolved once from its parameters.
struct Model {
  CaseId id = CaseId::T31;
  CaseParams p;
  bool slit_hypothesis = true;
  SlitSpec slit;
  RegionSpec region;
  double band_lo = 0.0;
  double band_hi = 0.0;
  double strong_delta = 0.0;
  double convex_order = 0.0;
  double concl_scale = 1.0;
  double m_alpha_weight = 1.0;  // weight on 1 + zf''/f' in the T43 conclusion
};

Model build_model(const TheoremCase& tc) {
  Model m;
  m.id = tc.id;
  m.p = tc.params;
  CaseParams& p = m.p;
  switch (tc.id) {
    case CaseId::T31:
      m.slit = slit_constants(p.alpha, p.beta, p.n);
      break;
    case CaseId::C32:
      m.slit = imaginary_slit(c_lambda(p.lambda));
      break;
    case CaseId::C33:
      p.lambda = 0.0;
      m.slit = imaginary_slit(c_lambda(0.0));
      break;
    case CaseId::T34:
      m.slit = imaginary_slit(a_min(p.lambda));
      break;
    case CaseId::C35:
      require(p.alpha >= 0.0 && p.alpha < 1.0, "C35 needs alpha in [0, 1)");
      m.slit = imaginary_slit(a_min(p.lambda));
      break;
    case CaseId::T35:
    case CaseId::C38:
    case CaseId::C37II:
      require(p.alpha >= 0.0 && p.alpha <= 1.0, std::string(to_string(tc.id)) + " needs alpha in [0, 1]");
      [[fallthrough]];
    case CaseId::C37I: {
      require(p.p == 1, "membership sampling is implemented for p = 1 only");
      const Thm3Constants k = thm3_constants(p.gamma, p.delta, 1, p.lambda);
      m.slit = k.slit;
      if (tc.id == CaseId::C38) {
        m.slit_hypothesis = false;
        m.region = build_region(p.region, k.x, k.y_min, 1, p.gamma, p.delta);
      }
      break;
    }
    case CaseId::T39:
    case CaseId::C310: {
      const ArgConstants k = arg_theorem_constants(p.alpha, p.beta, p.gamma);
      m.slit_hypothesis = false;
      m.band_lo = k.delta1 * kPi / 2;
      m.band_hi = k.delta2 * kPi / 2;
      break;
    }
    case CaseId::C311: {
      const StrongOrders k = strong_orders(p.alpha, p.gamma);
      m.slit_hypothesis = false;
      m.strong_delta = k.delta;
      m.convex_order = k.convex_order;
      break;
    }
    case CaseId::C42:
      p.lambda = 1.0;
      [[fallthrough]];
    case CaseId::T41:
      m.slit_hypothesis = false;
      m.concl_scale = radius_convexity(p.lambda, p.alpha);
      break;
    case CaseId::C44:
      p.alpha = 1.0;
      [[fallthrough]];
    case CaseId::T43:
      m.slit_hypothesis = false;
      m.concl_scale = radius_inv_alpha_convexity(p.lambda, p.alpha);
      m.m_alpha_weight = 1.0 / p.alpha;
      break;
  }
  return m;
}

// Complex image value for slit hypotheses.
cplx hypothesis_value(const Model& m, const Jet& f, const Jet* g, cplx z) {
  const CaseParams& p = m.p;
  switch (m.id) {
    case CaseId::T31: return evaluate_functional(FunctionalSpec::slit1(p.alpha, p.beta), f, nullptr, z);
    case CaseId::C32: return evaluate_functional(FunctionalSpec::mixed(p.lambda), f, nullptr, z);
    case CaseId::C33: return convex(f, z);
    case CaseId::T34: return evaluate_functional(FunctionalSpec::tilted(p.lambda), f, nullptr, z);
    case CaseId::C35: {
      const double s = 1.0 - p.alpha;
      const Jet q{(f.value - p.alpha) / s, f.d1 / s, f.d2 / s};
      return evaluate_functional(FunctionalSpec::tilted(p.lambda), q, nullptr, z);
    }
    case CaseId::T35:
    case CaseId::C38:
      return evaluate_functional(FunctionalSpec::thm3(p.gamma, p.delta, p.alpha, 1), f, nullptr, z);
    case CaseId::C37I: return evaluate_functional(FunctionalSpec::two_fn_ratio(p.gamma, p.delta), f, g, z);
    case CaseId::C37II: return evaluate_functional(FunctionalSpec::two_fn_power(p.gamma, p.delta, p.alpha), f, g, z);
    default: break;
  }
  throw Error(ErrorCode::InvalidInput, "case has no image hypothesis");
}

// Slack for band, region and class hypotheses.
double hypothesis_slack(const Model& m, const Jet& f, cplx z) {
  const CaseParams& p = m.p;
  switch (m.id) {
    case CaseId::C38:
      return m.region.slack(hypothesis_value(m, f, nullptr, z));
    case CaseId::T39: {
      const double a = evaluate_functional(FunctionalSpec::arg_sum(p.gamma), f, nullptr, z).real();
      return std::min(a - m.band_lo, m.band_hi - a);
    }
    case CaseId::C310: {
      const double a = weighted_arg(f, z, p.gamma);
      return std::min(a - m.band_lo, m.band_hi - a);
    }
    case CaseId::C311:
      return m.strong_delta * kPi / 2 - std::abs(weighted_arg(f, z, p.gamma));
    case CaseId::T41:
    case CaseId::C42:
    case CaseId::T43:
    case CaseId::C44: {
      const cplx u = evaluate_functional(FunctionalSpec::u_func(p.alpha), f, nullptr, z);
      return std::min(p.lambda - std::abs(u - 1.0), (f.value / z).real());
    }
    default: break;
  }
  throw Error(ErrorCode::InvalidInput, "case has no slack hypothesis");
}

double conclusion_slack(const Model& m, const Jet& f, const Jet* g, cplx z) {
  const CaseParams& p = m.p;
  const cplx rot = std::polar(1.0, -p.lambda);
  switch (m.id) {
    case CaseId::T31:
    case CaseId::T39:
      return sector_slack(f.value, p.alpha, p.beta);
    case CaseId::C32:
    case CaseId::C33:
      return starlike(f, z).real();
    case CaseId::T34:
      return (rot * f.value).real();
    case CaseId::C35:
      return (rot * f.value).real() - p.alpha * std::cos(p.lambda);
    case CaseId::T35:
    case CaseId::C38:
      return (rot * evaluate_functional(FunctionalSpec::u_func(p.alpha), f, nullptr, z)).real();
    case CaseId::C37I:
      return (rot * z * f.d1 / g->value).real();
    case CaseId::C37II: {
      const cplx head = starlike(f, z) * principal_power(f.value / g->value, p.alpha);
      return (rot * head).real();
    }
    case CaseId::C310:
      return sector_slack(starlike(f, z), p.alpha, p.beta);
    case CaseId::C311: {
      const cplx s = starlike(f, z);
      const cplx c = convex(f, z);
      if (s == cplx{0.0, 0.0} || c == cplx{0.0, 0.0})
        throw Error(ErrorCode::EvaluationError, "argument undefined where the value vanishes");
      return std::min(p.alpha * kPi / 2 - std::abs(principal_arg(s)),
                      m.convex_order * kPi / 2 - std::abs(principal_arg(c)));
    }
    case CaseId::T41:
    case CaseId::C42:
      return convex(f, z).real();
    case CaseId::T43:
    case CaseId::C44: {
      const double w = m.m_alpha_weight;
      return (w * convex(f, z) + (1.0 - w) * starlike(f, z)).real();
    }
  }
  return 0.0;
}

double finite(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::EvaluationError, "non-finite value");
  return v;
}

cplx finite(cplx v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw Error(ErrorCode::EvaluationError, "non-finite value");
  return v;
}

AnalyticFunction in_role(const AnalyticFunction& fn, FunctionRole role) {
  const int order = fn.zero_order();
  const int want = role == FunctionRole::H ? 0 : 1;
  if (order == want) return fn;
  if (order == 1 - want) return fn.shifted(want - order);
  throw Error(ErrorCode::EvaluationError, "function has a zero of order " + std::to_string(order) + " at the origin");
}

// h - h(0) must vanish to order n for h in H[1, n].
bool in_h_class(const AnalyticFunction& h, int n) {
  if (n <= 1) return true;
  std::vector<cplx> c = h.is_taylor() ? h.taylor_series().coeffs : taylor_from_mobius(h, n).taylor_series().coeffs;
  for (int k = 1; k < n && k < static_cast<int>(c.size()); ++k)
    if (std::abs(c[static_cast<std::size_t>(k)]) > 1e-12) return false;
  return true;
}

cplx normalization_value(const AnalyticFunction& fn, FunctionRole role) {
  // h(0) for H, f'(0) for F: both must equal 1.
  if (fn.is_mobius()) return 1.0;
  const auto& c = fn.taylor_series().coeffs;
  const std::size_t k = role == FunctionRole::H ? 0 : 1;
  return k < c.size() ? c[k] : cplx{0.0, 0.0};
}

CaseRow scan_member(const Model& m, const AnalyticFunction& f_in, const AnalyticFunction* g_in, const DiskGrid& grid,
                    const std::optional<DiskGrid>& concl_grid, double eps) {
  CaseRow row;
  row.function_id = f_in.label();
  if (g_in) row.function_id += " | " + g_in->label();
  try {
    const FunctionRole role = case_role(m.id);
    const AnalyticFunction f = in_role(f_in, role);
    std::optional<AnalyticFunction> g;
    if (g_in) g = in_role(*g_in, FunctionRole::F);
    if (std::abs(normalization_value(f, role) - 1.0) > 1e-12)
      throw Error(ErrorCode::EvaluationError, role == FunctionRole::H ? "needs h(0) = 1" : "needs f'(0) = 1");

    const auto& pts = grid.points();
    if (m.slit_hypothesis) {
      std::vector<cplx> values(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const Jet jf = f.jet(pts[i]);
        std::optional<Jet> jg;
        if (g) jg = g->jet(pts[i]);
        values[i] = finite(hypothesis_value(m, jf, jg ? &*jg : nullptr, pts[i]));
      }
      const SlitCheck sc = slit_avoidance(values, m.slit, eps);
      const auto k = static_cast<std::size_t>(grid.angles_per_ring());
      for (std::size_t r = 0; r < grid.ring_count() && !row.hyp_crossing; ++r)
        row.hyp_crossing = ring_crosses_slit(std::span<const cplx>(values).subspan(r * k, k), m.slit);
      row.hyp_margin = sc.min_distance;
      row.hypothesis_holds = sc.avoided && !row.hyp_crossing;
    } else {
      double lo = std::numeric_limits<double>::infinity();
      for (cplx z : pts) lo = std::min(lo, finite(hypothesis_slack(m, f.jet(z), z)));
      row.hyp_margin = lo;
      row.hypothesis_holds = lo >= eps;
    }
    if (m.id == CaseId::T31 && !in_h_class(f, m.p.n)) row.hypothesis_holds = false;
    row.evaluated = true;

    if (row.hypothesis_holds) {
      const DiskGrid& cg = concl_grid ? *concl_grid : grid;
      double lo = std::numeric_limits<double>::infinity();
      cplx at{0.0, 0.0};
      for (cplx z : cg.points()) {
        const Jet jf = f.jet(z);
        std::optional<Jet> jg;
        if (g) jg = g->jet(z);
        const double s = finite(conclusion_slack(m, jf, jg ? &*jg : nullptr, z));
        if (s < lo) {
          lo = s;
          at = z;
        }
      }
      row.conclusion_checked = true;
      row.concl_margin = lo;
      row.concl_witness = at;
      row.counterexample = lo < 0.0;
    }
  } catch (const Error& e) {
    row.evaluated = false;
    row.hypothesis_holds = false;
    row.conclusion_checked = false;
    row.error = e.what();
  }
  return row;
}

std::optional<DiskGrid> conclusion_grid(const Model& m, const DiskGrid& grid) {
  if (m.concl_scale == 1.0) return std::nullopt;
  return grid.scaled(m.concl_scale);
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(std::round((lo + (hi - lo) * k / (n - 1)) * 1e12) / 1e12);
  return out;
}

}  // namespace

std::string_view to_string(CaseId id) { return kNames[static_cast<std::size_t>(id)]; }

CaseId parse_case_id(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == text) return static_cast<CaseId>(i);
  throw Error(ErrorCode::InvalidInput, "unknown case id '" + std::string(text) + "'");
}

const std::array<CaseId, 16>& all_cases() {
  static const std::array<CaseId, 16> ids = {CaseId::T31, CaseId::C32,  CaseId::C33,  CaseId::T34,
                                             CaseId::C35, CaseId::T35,  CaseId::C37I, CaseId::C37II,
                                             CaseId::C38, CaseId::T39,  CaseId::C310, CaseId::C311,
                                             CaseId::T41, CaseId::C42,  CaseId::T43,  CaseId::C44};
  return ids;
}

FunctionRole case_role(CaseId id) {
  switch (id) {
    case CaseId::T31:
    case CaseId::T34:
    case CaseId::C35:
    case CaseId::T39:
      return FunctionRole::H;
    default:
      return FunctionRole::F;
  }
}

bool case_needs_partner(CaseId id) { return id == CaseId::C37I || id == CaseId::C37II; }

TheoremCase TheoremCase::defaults(CaseId id) {
  TheoremCase c{id, {}};
  CaseParams& p = c.params;
  switch (id) {
    case CaseId::T31: p.alpha = 0.5; p.beta = 0.25; p.n = 1; break;
    case CaseId::C32: p.lambda = 0.5; break;
    case CaseId::C33: p.lambda = 0.0; break;
    case CaseId::T34: p.lambda = kPi / 6; break;
    case CaseId::C35: p.alpha = 0.25; p.lambda = kPi / 6; break;
    case CaseId::T35: p.gamma = 1.0; p.delta = 1.0; p.alpha = 0.5; p.lambda = kPi / 6; break;
    case CaseId::C37I: p.gamma = 1.0; p.delta = 1.0; p.lambda = kPi / 6; break;
    case CaseId::C37II: p.gamma = 1.0; p.delta = 1.0; p.alpha = 0.5; p.lambda = kPi / 6; break;
    case CaseId::C38:
      p.gamma = 1.0; p.delta = 1.0; p.alpha = 0.5; p.lambda = 0.0; p.region = RegionKind::Disk;
      break;
    case CaseId::T39:
    case CaseId::C310: p.alpha = 0.5; p.beta = 0.25; p.gamma = 0.5; break;
    case CaseId::C311: p.alpha = 0.5; p.gamma = 0.5; break;
    case CaseId::T41: p.lambda = 0.5; p.alpha = 0.5; break;
    case CaseId::C42: p.lambda = 1.0; p.alpha = 0.5; break;
    case CaseId::T43: p.lambda = 0.5; p.alpha = 0.5; break;
    case CaseId::C44: p.lambda = 0.5; p.alpha = 1.0; break;
  }
  return c;
}

std::vector<AnalyticFunction> radius_extras() {
  std::vector<AnalyticFunction> out;
  for (double v : linspace(-1.0, 1.0, 21))
  {
    char buf[64];
    std::snprintf(buf, sizeof buf, "ratio v=%g", v);
    out.push_back(AnalyticFunction::mobius(1, {{cplx{-v, 0.0}, -1.0}}).with_label(buf));
  }
  for (double u : {-1.0, -0.5, 0.5, 1.0})
    for (double e : {-1.0, -0.5, 0.5, 1.0, 2.0}) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "power u=%g e=%g", u, e);
      out.push_back(AnalyticFunction::mobius(1, {{cplx{u, 0.0}, e}}).with_label(buf));
    }
  return out;
}

std::vector<AnalyticFunction> default_family(CaseId id) {
  if (case_needs_partner(id)) return make_family(FunctionFamily::mobius_ratios_fine());
  std::vector<AnalyticFunction> out =
      make_family(std::vector<FunctionFamily>{FunctionFamily::mobius_ratios(), FunctionFamily::mobius_ratios_fine(),
                                              FunctionFamily::sector_powers(), FunctionFamily::random_taylor(7, 10, 50)});
  if (id == CaseId::T41 || id == CaseId::C42 || id == CaseId::T43 || id == CaseId::C44) {
    auto extra = radius_extras();
    out.insert(out.end(), extra.begin(), extra.end());
  }
  return out;
}

std::vector<AnalyticFunction> default_partners(const DiskGrid& grid) {
  std::vector<AnalyticFunction> candidates;
  candidates.push_back(AnalyticFunction::mobius(1, {}).with_label("g=z"));
  for (double v : {-0.5, 0.5, 0.9}) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "g=z/(1-vz) v=%g", v);
    candidates.push_back(AnalyticFunction::mobius(1, {{cplx{-v, 0.0}, -1.0}}).with_label(buf));
  }
  for (double v : {0.5, -0.9}) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "g=z/(1-vz)^2 v=%g", v);
    candidates.push_back(AnalyticFunction::mobius(1, {{cplx{-v, 0.0}, -2.0}}).with_label(buf));
  }
  for (double a : {0.5, 1.5}) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "g=z/(1-iz)^a a=%g", a);
    candidates.push_back(AnalyticFunction::mobius(1, {{cplx{0.0, -1.0}, -a}}).with_label(buf));
  }
  std::vector<AnalyticFunction> out;
  for (auto& g : candidates)
    if (check_membership(ClassSpec::starlike(), g, grid).verdict == Verdict::Holds) out.push_back(std::move(g));
  return out;
}

CaseRow evaluate_member(const TheoremCase& c, const AnalyticFunction& f, const AnalyticFunction* g,
                        const DiskGrid& grid, double eps) {
  const Model m = build_model(c);
  if (case_needs_partner(c.id) && g == nullptr)
    throw Error(ErrorCode::MissingSecondFunction, std::string(to_string(c.id)) + " needs a partner function g");
  return scan_member(m, f, case_needs_partner(c.id) ? g : nullptr, grid, conclusion_grid(m, grid), eps);
}

VerificationReport verify_theorem(const TheoremCase& c, const std::vector<AnalyticFunction>& family,
                                  const DiskGrid& grid, double eps, const std::vector<AnalyticFunction>& partners) {
  const auto start = std::chrono::steady_clock::now();
  if (family.empty()) throw Error(ErrorCode::BadFamilySpec, "family is empty");
  const Model m = build_model(c);
  const auto cgrid = conclusion_grid(m, grid);

  std::vector<AnalyticFunction> gs;
  if (case_needs_partner(c.id)) {
    gs = partners.empty() ? default_partners(grid) : partners;
    if (gs.empty()) throw Error(ErrorCode::BadFamilySpec, "no starlike partner functions");
  }
  const std::size_t per = gs.empty() ? 1 : gs.size();
  const std::size_t total = family.size() * per;

  VerificationReport rep;
  rep.case_id = c.id;
  rep.cases_total = total;
  rep.rows.resize(total);
  parallel_for(total, [&](std::size_t i) {
    const AnalyticFunction& f = family[i / per];
    const AnalyticFunction* g = gs.empty() ? nullptr : &gs[i % per];
    rep.rows[i] = scan_member(m, f, g, grid, cgrid, eps);
  });

  for (const CaseRow& row : rep.rows) {
    if (!row.evaluated) ++rep.evaluation_errors;
    if (row.hypothesis_holds) ++rep.hypothesis_holds_count;
    if (row.counterexample) rep.conclusion_failures.push_back({row.function_id, row.concl_witness, row.concl_margin});
  }
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

MembershipReport verify_lemma_tilt(double b, double m, const DiskGrid& grid) {
  const double lambda = lambda_tilt(b, m);
  const AnalyticFunction h =
      AnalyticFunction::mobius(0, {{std::polar(1.0, m * kPi), 1.0}, {cplx{-b, 0.0}, -1.0}});
  return check_membership(ClassSpec::p_tilt(-lambda), h, grid, 0.0);
}

}  // namespace gft
