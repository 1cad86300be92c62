#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gft/constants.hpp"
#include "gft/disk_grid.hpp"
#include "gft/error.hpp"
#include "gft/families.hpp"
#include "gft/functional.hpp"
#include "gft/json_io.hpp"
#include "gft/membership.hpp"
#include "gft/radius.hpp"
#include "gft/theorem_verify.hpp"

namespace gft::cli {
namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string pair(cplx z) { return num(z.real()) + "," + num(z.imag()); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  f << text;
}

DiskGrid grid_profile(const std::string& name) {
  if (name == "default") return DiskGrid::default_profile();
  if (name == "coarse") return DiskGrid::coarse_profile();
  throw Error(ErrorCode::BadGridSpec, "grid profile must be 'default' or 'coarse'");
}

// "default", or '+'-joined parts: mobius, mobius-fine, sector, radius,
// taylor[:seed,degree,count], or a path to a JSON function file.
std::vector<AnalyticFunction> resolve_family(const std::string& spec, CaseId id) {
  if (spec == "default") return default_family(id);
  std::vector<AnalyticFunction> out;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, '+')) {
    std::vector<AnalyticFunction> add;
    if (part == "mobius") {
      add = make_family(FunctionFamily::mobius_ratios());
    } else if (part == "mobius-fine") {
      add = make_family(FunctionFamily::mobius_ratios_fine());
    } else if (part == "sector") {
      add = make_family(FunctionFamily::sector_powers());
    } else if (part == "radius") {
      add = radius_extras();
    } else if (part.rfind("taylor", 0) == 0) {
      unsigned long long seed = 7;
      int degree = 10, count = 50;
      if (part.size() > 6) {
        if (std::sscanf(part.c_str(), "taylor:%llu,%d,%d", &seed, &degree, &count) != 3)
          throw Error(ErrorCode::BadFamilySpec, "expected taylor:SEED,DEGREE,COUNT, got '" + part + "'");
      }
      add = make_family(FunctionFamily::random_taylor(seed, degree, count));
    } else if (std::filesystem::exists(part)) {
      add = make_family(FunctionFamily::explicit_list(load_functions(part)));
    } else {
      throw Error(ErrorCode::BadFamilySpec, "unknown family '" + part + "'");
    }
    out.insert(out.end(), add.begin(), add.end());
  }
  if (out.empty()) throw Error(ErrorCode::BadFamilySpec, "family is empty");
  return out;
}

ordered_json params_json(const TheoremCase& c) {
  const CaseParams& p = c.params;
  return ordered_json{{"alpha", round12(p.alpha)}, {"beta", round12(p.beta)},   {"gamma", round12(p.gamma)},
                      {"delta", round12(p.delta)}, {"lambda", round12(p.lambda)}, {"n", p.n},
                      {"p", p.p},                  {"region", to_string(p.region)}};
}

// ---------------------------------------------------------------------------

struct ConstantsArgs {
  std::optional<double> alpha, beta, gamma, delta, lambda, b, m;
  int n = 1;
  int p = 1;
  bool json = false;
};

int run_constants(const ConstantsArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, double>> values;
  auto group = [&](const char* name, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      err << "note: " << name << " not applicable: " << e.what() << "\n";
    }
  };
  auto put = [&](const std::string& k, double v) { values.emplace_back(k, v); };

  if (a.alpha && a.beta) {
    group("slit constants", [&] {
      const double e = eta(*a.alpha, *a.beta);
      const SlitSpec s = slit_constants(*a.alpha, *a.beta, a.n);
      put("eta", e);
      put("x1", s.rays[0].anchor.real());
      put("y1_max", s.rays[0].anchor.imag());
      put("x2", s.rays[1].anchor.real());
      put("y2_min", s.rays[1].anchor.imag());
    });
  }
  if (a.lambda) {
    group("C_lambda", [&] { put("C_lambda", c_lambda(*a.lambda)); });
    group("A_min", [&] { put("A_min", a_min(*a.lambda)); });
  }
  if (a.gamma && a.delta) {
    group("X/Y", [&] {
      const Thm3Constants k = thm3_constants(*a.gamma, *a.delta, a.p, a.lambda.value_or(0.0));
      put("X", k.x);
      put("Y", k.y_min);
    });
  }
  if (a.alpha && a.beta && a.gamma) {
    group("arg constants", [&] {
      const ArgConstants k = arg_theorem_constants(*a.alpha, *a.beta, *a.gamma);
      put("delta1", k.delta1);
      put("delta2", k.delta2);
      put("M1", k.M1);
      put("M2", k.M2);
      put("x_star1", k.x_star1);
      put("x_star2", k.x_star2);
    });
  }
  if (a.alpha) {
    group("M_alpha", [&] { put("M_alpha", m_alpha(*a.alpha)); });
    if (a.gamma)
      group("strong orders", [&] {
        const StrongOrders k = strong_orders(*a.alpha, *a.gamma);
        put("delta_strong", k.delta);
        put("strong_convex_order", k.convex_order);
      });
  }
  if (a.lambda && a.alpha) {
    group("R_conv", [&] { put("R_conv", radius_convexity(*a.lambda, *a.alpha)); });
    group("R_inv_alpha", [&] { put("R_inv_alpha", radius_inv_alpha_convexity(*a.lambda, *a.alpha)); });
  }
  if (a.b && a.m) group("lambda_tilt", [&] { put("lambda_tilt", lambda_tilt(*a.b, *a.m)); });

  if (values.empty()) {
    err << "error: no constant applies to the given parameters\n";
    return kExitValidation;
  }
  if (a.json) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : values) j[k] = round12(v);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : values) out << k << " = " << num(v) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string cls, fn, grid = "default";
  double eps = kMembershipEps;
  bool json = false;
};

int run_check(const CheckArgs& a, std::ostream& out) {
  const ClassSpec spec = parse_class_spec(a.cls);
  const DiskGrid grid = grid_profile(a.grid);
  const auto fns = load_functions(a.fn);
  ordered_json all = ordered_json::array();
  for (std::size_t i = 0; i < fns.size(); ++i) {
    const MembershipReport r = check_membership(spec, fns[i], grid, a.eps);
    if (a.json) {
      ordered_json j = to_json(r);
      j["class"] = spec.to_string();
      if (!fns[i].label().empty()) j["function"] = fns[i].label();
      all.push_back(j);
      continue;
    }
    const std::string name = fns[i].label().empty() ? "function " + std::to_string(i) : fns[i].label();
    out << name << ": " << spec.to_string() << " " << to_string(r.verdict) << " margin="
        << (std::isfinite(r.margin) ? num(r.margin) : std::string("nan")) << " witness=" << pair(r.witness)
        << " samples=" << r.samples_checked;
    if (!r.error.empty()) out << " error=\"" << r.error << "\"";
    out << "\n";
  }
  if (a.json) out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string case_id, params = "{}", family = "default", grid = "default", out;
  double eps = kHypothesisEps;
  bool json = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const CaseId id = parse_case_id(a.case_id);
  nlohmann::json params;
  try {
    params = nlohmann::json::parse(a.params);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("--params is not valid JSON: ") + e.what());
  }
  const TheoremCase tc = case_from_json(id, params);
  const DiskGrid grid = grid_profile(a.grid);
  const auto family = resolve_family(a.family, id);
  const VerificationReport rep = verify_theorem(tc, family, grid, a.eps);

  if (!a.out.empty()) {
    std::ostringstream csv;
    csv << "function,evaluated,hyp_margin,hypothesis,concl_margin,conclusion,error\n";
    for (const CaseRow& r : rep.rows) {
      csv << csv_field(r.function_id) << "," << (r.evaluated ? "true" : "false") << ","
          << (r.evaluated ? num(r.hyp_margin) : "") << ","
          << (!r.evaluated ? "ERROR" : r.hypothesis_holds ? "HOLDS" : "FAILS") << ","
          << (r.conclusion_checked ? num(r.concl_margin) : "") << ","
          << (!r.conclusion_checked ? "SKIPPED" : r.counterexample ? "FAILS" : "HOLDS") << ","
          << csv_field(r.error) << "\n";
    }
    write_file(a.out, csv.str());
  }

  if (a.json) {
    ordered_json j = to_json(rep);
    j["params"] = params_json(tc);
    out << j.dump(2) << "\n";
  } else {
    out << "case = " << to_string(id) << "\n"
        << "params = " << params_json(tc).dump() << "\n"
        << "members = " << rep.cases_total << "\n"
        << "hypothesis_holds = " << rep.hypothesis_holds_count << "\n"
        << "evaluation_errors = " << rep.evaluation_errors << "\n"
        << "counterexamples = " << rep.conclusion_failures.size() << "\n";
    for (const auto& c : rep.conclusion_failures)
      out << "counterexample function=\"" << c.function_id << "\" witness=" << pair(c.witness)
          << " margin=" << num(c.margin) << "\n";
  }
  return rep.conclusion_failures.empty() ? kExitOk : kExitCounterexample;
}

// ---------------------------------------------------------------------------

struct RadiusArgs {
  double lambda = 1.0, alpha = 1.0, tol = kRadiusTol;
  int angles = 720;
  std::string family = "default", property = "convex", out;
};

int run_radius(const RadiusArgs& a, std::ostream& out) {
  double closed = 0.0;
  ClassSpec spec = ClassSpec::convex();
  if (a.property == "convex") {
    closed = radius_convexity(a.lambda, a.alpha);
  } else if (a.property == "inv-alpha") {
    closed = radius_inv_alpha_convexity(a.lambda, a.alpha);
    spec = ClassSpec::m_alpha(1.0 / a.alpha);
  } else {
    throw Error(ErrorCode::InvalidInput, "--property must be 'convex' or 'inv-alpha'");
  }
  const auto family = resolve_family(a.family, CaseId::T41);
  const auto members = filter_u_and_r(family, a.lambda, a.alpha, DiskGrid::default_profile());
  if (members.empty()) throw Error(ErrorCode::BadFamilySpec, "no family member lies in U(lambda, alpha) and R");
  const FamilyRadius fr = family_property_radius(members, spec, a.angles, a.tol);

  std::ostringstream csv;
  csv << "lambda,alpha,closed_form_R,empirical_family_R,witness_params\n"
      << num(a.lambda) << "," << num(a.alpha) << "," << num(closed) << "," << num(fr.radius) << ","
      << csv_field(fr.witness) << "\n";
  if (!a.out.empty()) write_file(a.out, csv.str());
  out << csv.str();
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct DumpArgs {
  std::string functional, fn, g, out, grid = "default";
  std::optional<double> lambda, alpha, beta;
  int n = 1;
};

ordered_json forbidden_geometry(const FunctionalSpec& spec, const DumpArgs& a) {
  ordered_json geo = ordered_json::object();
  auto imaginary = [](double h) {
    return SlitSpec{{Ray{cplx{0.0, h}, RayDirection::Up}, Ray{cplx{0.0, -h}, RayDirection::Down}}};
  };
  switch (spec.kind) {
    case FunctionalKind::Slit1Lhs:
      geo["slit"] = to_json(slit_constants(spec.alpha, spec.beta, a.n));
      break;
    case FunctionalKind::Mixed:
      geo["slit"] = to_json(imaginary(c_lambda(spec.lambda)));
      break;
    case FunctionalKind::Convex:
      geo["slit"] = to_json(imaginary(c_lambda(0.0)));
      break;
    case FunctionalKind::TiltedLhs:
      geo["slit"] = to_json(imaginary(a_min(spec.lambda)));
      break;
    case FunctionalKind::Thm3Lhs:
    case FunctionalKind::TwoFnRatio:
    case FunctionalKind::TwoFnPower: {
      const int p = spec.kind == FunctionalKind::Thm3Lhs ? spec.p : 1;
      const double lambda = a.lambda.value_or(0.0);
      const Thm3Constants k = thm3_constants(spec.gamma, spec.delta, p, lambda);
      geo["slit"] = to_json(k.slit);
      ordered_json regions = ordered_json::array();
      for (RegionKind kind : {RegionKind::HalfPlane, RegionKind::Rectangle, RegionKind::Disk, RegionKind::Ellipse}) {
        if (kind == RegionKind::Disk && k.x != 0.0) continue;
        regions.push_back(to_json(build_region(kind, k.x, k.y_min, p, spec.gamma, spec.delta)));
      }
      geo["regions"] = regions;
      break;
    }
    case FunctionalKind::ArgSum:
      if (a.alpha && a.beta) {
        const ArgConstants k = arg_theorem_constants(*a.alpha, *a.beta, spec.gamma);
        geo["band"] = ordered_json::array({round12(k.delta1 * kPi / 2), round12(k.delta2 * kPi / 2)});
      }
      break;
    default:
      break;
  }
  return geo;
}

int run_dump(const DumpArgs& a, std::ostream& out, std::ostream& err) {
  const FunctionalSpec spec = parse_functional_spec(a.functional);
  const auto fns = load_functions(a.fn);
  std::optional<AnalyticFunction> g;
  if (!a.g.empty()) g = load_functions(a.g).front();
  if (spec.needs_second_function() && !g)
    throw Error(ErrorCode::MissingSecondFunction, spec.to_string() + " needs --g");
  const DiskGrid grid = grid_profile(a.grid);
  const AnalyticFunction& f = fns.front();

  std::ostringstream csv;
  csv << "re_z,im_z,re_w,im_w\n";
  std::size_t written = 0, skipped = 0;
  double re_lo = std::numeric_limits<double>::infinity(), re_hi = -re_lo, im_lo = re_lo, im_hi = -re_lo;
  for (cplx z : grid.points()) {
    cplx w;
    try {
      w = evaluate_functional(spec, f, g ? &*g : nullptr, z);
    } catch (const Error&) {
      ++skipped;
      continue;
    }
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      ++skipped;
      continue;
    }
    csv << num(z.real()) << "," << num(z.imag()) << "," << num(w.real()) << "," << num(w.imag()) << "\n";
    ++written;
    re_lo = std::min(re_lo, w.real());
    re_hi = std::max(re_hi, w.real());
    im_lo = std::min(im_lo, w.imag());
    im_hi = std::max(im_hi, w.imag());
  }

  ordered_json geo;
  geo["functional"] = spec.to_string();
  geo["points"] = written;
  geo["skipped"] = skipped;
  if (written > 0)
    geo["bounds"] = {{"re", {round12(re_lo), round12(re_hi)}}, {"im", {round12(im_lo), round12(im_hi)}}};
  const ordered_json forbidden = forbidden_geometry(spec, a);
  for (const auto& [k, v] : forbidden.items()) geo[k] = v;

  std::filesystem::path side(a.out);
  side.replace_extension(".geometry.json");
  write_file(a.out, csv.str());
  write_file(side.string(), geo.dump(2) + "\n");
  if (skipped > 0) err << "note: " << skipped << " grid points could not be evaluated\n";
  out << "wrote " << written << " samples to " << a.out << " and geometry to " << side.string() << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constants, class membership and theorem scans for analytic functions on the unit disk", "gft"};
  app.require_subcommand(1);

  ConstantsArgs ca;
  auto* constants = app.add_subcommand("constants", "Print every constant that applies to the given parameters");
  constants->add_option("--alpha", ca.alpha);
  constants->add_option("--beta", ca.beta);
  constants->add_option("--gamma", ca.gamma);
  constants->add_option("--delta", ca.delta);
  constants->add_option("--lambda", ca.lambda);
  constants->add_option("--n", ca.n, "Order n of H[1,n]")->capture_default_str();
  constants->add_option("--p", ca.p, "Valence p of A_p")->capture_default_str();
  constants->add_option("--b", ca.b, "Pole parameter of the tilt lemma");
  constants->add_option("--m", ca.m, "Rotation parameter of the tilt lemma");
  constants->add_flag("--json", ca.json, "Emit a JSON object keyed by symbol");

  CheckArgs ck;
  auto* check = app.add_subcommand("check", "Membership of functions in a class on a disk grid");
  check->add_option("--class", ck.cls, "e.g. G(0.5,0.5), P_TILT(-0.5), U(1,1), R, CONVEX")->required();
  check->add_option("--fn", ck.fn, "JSON file with one function or an array")->required();
  check->add_option("--grid", ck.grid, "default or coarse")->capture_default_str();
  check->add_option("--eps", ck.eps, "Margin threshold")->capture_default_str();
  check->add_flag("--json", ck.json);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Scan a theorem's hypothesis => conclusion over a family");
  verify->add_option("--case", va.case_id, "T31 C32 C33 T34 C35 T35 C37I C37II C38 T39 C310 C311 T41 C42 T43 C44")
      ->required();
  verify->add_option("--params", va.params, "JSON object overriding the case defaults")->capture_default_str();
  verify->add_option("--family", va.family, "default | mobius | mobius-fine | sector | radius | taylor[:S,D,C] | FILE, joined by +")
      ->capture_default_str();
  verify->add_option("--grid", va.grid, "default or coarse")->capture_default_str();
  verify->add_option("--eps", va.eps, "Hypothesis margin threshold")->capture_default_str();
  verify->add_option("--out", va.out, "CSV report, one row per member");
  verify->add_flag("--json", va.json);

  RadiusArgs ra;
  auto* radius = app.add_subcommand("radius", "Closed-form radius against the empirical family envelope");
  radius->add_option("--lambda", ra.lambda)->required();
  radius->add_option("--alpha", ra.alpha)->required();
  radius->add_option("--family", ra.family)->capture_default_str();
  radius->add_option("--property", ra.property, "convex or inv-alpha")->capture_default_str();
  radius->add_option("--angles", ra.angles, "Samples per ring")->capture_default_str();
  radius->add_option("--tol", ra.tol, "Bisection tolerance")->capture_default_str();
  radius->add_option("--out", ra.out, "CSV file");

  DumpArgs da;
  auto* dump = app.add_subcommand("dump", "Write functional image samples and the forbidden geometry");
  dump->add_option("--functional", da.functional, "e.g. MIXED(0.5), THM3_LHS(1,1,0.5,1)")->required();
  dump->add_option("--fn", da.fn, "JSON function file")->required();
  dump->add_option("--g", da.g, "Second function for TWO_FN_*");
  dump->add_option("--out", da.out, "CSV path; geometry goes next to it as *.geometry.json")->required();
  dump->add_option("--grid", da.grid)->capture_default_str();
  dump->add_option("--lambda", da.lambda, "Tilt for THM3/TWO_FN slits");
  dump->add_option("--alpha", da.alpha, "Sector exponent for the ARG_SUM band");
  dump->add_option("--beta", da.beta, "Sector exponent for the ARG_SUM band");
  dump->add_option("--n", da.n, "Order n for SLIT1_LHS")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*constants) return run_constants(ca, out, err);
    if (*check) return run_check(ck, out);
    if (*verify) return run_verify(va, out);
    if (*radius) return run_radius(ra, out);
    if (*dump) return run_dump(da, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace gft::cli
