#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gft/analytic_function.hpp"
#include "gft/constants.hpp"
#include "gft/membership.hpp"
#include "gft/theorem_verify.hpp"

namespace gft {

using ordered_json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so serialized output is stable.
double round12(double v);

ordered_json to_json(cplx z);
/// Reads an [re, im] pair (a bare number is accepted as a real value).
cplx complex_from_json(const nlohmann::json& j);

/// {"variant":"taylor","tag":{"class":"A","p":1},"coeffs":[[re,im],...]},
/// {"variant":"taylor","tag":{"class":"H","a":[re,im],"n":1},"coeffs":[...]} or
/// {"variant":"mobius","q":1,"terms":[[[re,im],e],...]}; an optional "label".
/// Throws InvalidInput on schema violations.
AnalyticFunction function_from_json(const nlohmann::json& j);
ordered_json to_json(const AnalyticFunction& f);

/// A file holding one function object or an array of them.
std::vector<AnalyticFunction> load_functions(const std::string& path);

ordered_json to_json(const MembershipReport& r);
ordered_json to_json(const SlitSpec& s);
ordered_json to_json(const RegionSpec& r);
ordered_json to_json(const VerificationReport& r);

/// Reads {"alpha":..,"beta":..,"gamma":..,"delta":..,"lambda":..,"n":..,"p":..,
/// "region":"DISK"|"HALF_PLANE"|"RECTANGLE"|"ELLIPSE"} over the case defaults.
TheoremCase case_from_json(CaseId id, const nlohmann::json& params);

RegionKind parse_region_kind(const std::string& text);
std::string to_string(RegionKind kind);

}  // namespace gft
