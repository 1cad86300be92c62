#include "gft/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "gft/error.hpp"

namespace gft {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

double number(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

ordered_json to_json(cplx z) { return ordered_json::array({round12(z.real()), round12(z.imag())}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) bad("complex numbers are [re, im] pairs");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

AnalyticFunction function_from_json(const json& j) {
  if (!j.is_object()) bad("function must be a JSON object");
  const std::string variant = j.value("variant", "");
  AnalyticFunction out = [&] {
    if (variant == "taylor") {
      if (!j.contains("coeffs") || !j["coeffs"].is_array()) bad("taylor function needs a coeffs array");
      std::vector<cplx> coeffs;
      for (const auto& c : j["coeffs"]) coeffs.push_back(complex_from_json(c));
      NormalizationTag tag = NormalizationTag::a_class(1);
      if (j.contains("tag")) {
        const json& t = j["tag"];
        const std::string cls = t.value("class", "");
        if (cls == "A") {
          tag = NormalizationTag::a_class(t.contains("p") ? integer(t["p"], "tag.p") : 1);
        } else if (cls == "H") {
          tag = NormalizationTag::h_class(t.contains("a") ? complex_from_json(t["a"]) : cplx{1.0, 0.0},
                                          t.contains("n") ? integer(t["n"], "tag.n") : 1);
        } else {
          bad("tag.class must be \"A\" or \"H\"");
        }
      }
      return AnalyticFunction::taylor(std::move(coeffs), tag);
    }
    if (variant == "mobius") {
      const int q = j.contains("q") ? integer(j["q"], "q") : 0;
      std::vector<MobiusFactor> factors;
      if (j.contains("terms")) {
        if (!j["terms"].is_array()) bad("terms must be an array");
        for (const auto& t : j["terms"]) {
          if (!t.is_array() || t.size() != 2) bad("each term is [[re, im], exponent]");
          factors.push_back({complex_from_json(t[0]), number(t[1], "exponent")});
        }
      }
      return AnalyticFunction::mobius(q, std::move(factors));
    }
    bad("variant must be \"taylor\" or \"mobius\"");
  }();
  if (j.contains("label")) {
    if (!j["label"].is_string()) bad("label must be a string");
    out = out.with_label(j["label"].get<std::string>());
  }
  return out;
}

ordered_json to_json(const AnalyticFunction& f) {
  ordered_json j;
  if (f.is_taylor()) {
    const TaylorSeries& s = f.taylor_series();
    j["variant"] = "taylor";
    if (s.tag.kind == NormalizationTag::Kind::A) {
      j["tag"] = {{"class", "A"}, {"p", s.tag.p}};
    } else {
      j["tag"] = {{"class", "H"}, {"a", to_json(s.tag.a)}, {"n", s.tag.n}};
    }
    ordered_json coeffs = ordered_json::array();
    for (cplx c : s.coeffs) coeffs.push_back(to_json(c));
    j["coeffs"] = coeffs;
  } else {
    const MobiusPowerProduct& m = f.mobius_product();
    j["variant"] = "mobius";
    j["q"] = m.q;
    ordered_json terms = ordered_json::array();
    for (const auto& t : m.factors) terms.push_back(ordered_json::array({to_json(t.u), round12(t.exponent)}));
    j["terms"] = terms;
  }
  if (!f.label().empty()) j["label"] = f.label();
  return j;
}

std::vector<AnalyticFunction> load_functions(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
  std::vector<AnalyticFunction> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(function_from_json(item));
  } else {
    out.push_back(function_from_json(j));
  }
  if (out.empty()) bad("'" + path + "' holds no functions");
  return out;
}

ordered_json to_json(const MembershipReport& r) {
  ordered_json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["margin"] = std::isfinite(r.margin) ? ordered_json(round12(r.margin)) : ordered_json(nullptr);
  j["witness"] = to_json(r.witness);
  j["samples"] = r.samples_checked;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

ordered_json to_json(const SlitSpec& s) {
  ordered_json rays = ordered_json::array();
  for (const Ray& r : s.rays)
    rays.push_back({{"anchor", to_json(r.anchor)}, {"direction", r.direction == RayDirection::Up ? "UP" : "DOWN"}});
  return rays;
}

RegionKind parse_region_kind(const std::string& text) {
  if (text == "HALF_PLANE") return RegionKind::HalfPlane;
  if (text == "RECTANGLE") return RegionKind::Rectangle;
  if (text == "DISK") return RegionKind::Disk;
  if (text == "ELLIPSE") return RegionKind::Ellipse;
  bad("region must be HALF_PLANE, RECTANGLE, DISK or ELLIPSE");
}

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::HalfPlane: return "HALF_PLANE";
    case RegionKind::Rectangle: return "RECTANGLE";
    case RegionKind::Disk: return "DISK";
    case RegionKind::Ellipse: return "ELLIPSE";
  }
  return "?";
}

ordered_json to_json(const RegionSpec& r) {
  ordered_json j;
  j["kind"] = to_string(r.kind);
  switch (r.kind) {
    case RegionKind::HalfPlane:
      j["X"] = round12(r.x);
      break;
    case RegionKind::Rectangle:
      j["X"] = round12(r.x);
      j["Y"] = round12(r.y);
      break;
    case RegionKind::Disk:
      j["center"] = to_json(r.center);
      j["radius"] = round12(r.radius);
      break;
    case RegionKind::Ellipse:
      j["X"] = round12(r.x);
      j["Y"] = round12(r.y);
      j["c"] = round12(r.focal);
      j["foci_axis"] = r.foci_on_real_axis ? "real" : "imaginary";
      break;
  }
  return j;
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["case"] = std::string(to_string(r.case_id));
  j["cases_total"] = r.cases_total;
  j["hypothesis_holds_count"] = r.hypothesis_holds_count;
  j["evaluation_errors"] = r.evaluation_errors;
  ordered_json fails = ordered_json::array();
  for (const auto& c : r.conclusion_failures)
    fails.push_back({{"function", c.function_id}, {"witness", to_json(c.witness)}, {"margin", round12(c.margin)}});
  j["conclusion_failures"] = fails;
  return j;
}

TheoremCase case_from_json(CaseId id, const json& params) {
  TheoremCase c = TheoremCase::defaults(id);
  if (params.is_null()) return c;
  if (!params.is_object()) bad("case parameters must be a JSON object");
  CaseParams& p = c.params;
  for (const auto& [key, value] : params.items()) {
    if (key == "alpha") p.alpha = number(value, "alpha");
    else if (key == "beta") p.beta = number(value, "beta");
    else if (key == "gamma") p.gamma = number(value, "gamma");
    else if (key == "delta") p.delta = number(value, "delta");
    else if (key == "lambda") p.lambda = number(value, "lambda");
    else if (key == "n") p.n = integer(value, "n");
    else if (key == "p") p.p = integer(value, "p");
    else if (key == "region") {
      if (!value.is_string()) bad("region must be a string");
      p.region = parse_region_kind(value.get<std::string>());
    } else {
      bad("unknown case parameter '" + key + "'");
    }
  }
  return c;
}

}  // namespace gft
