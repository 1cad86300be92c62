#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gft/analytic_function.hpp"
#include "gft/constants.hpp"
#include "gft/disk_grid.hpp"
#include "gft/families.hpp"
#include "gft/membership.hpp"

namespace gft {

enum class CaseId { T31, C32, C33, T34, C35, T35, C37I, C37II, C38, T39, C310, C311, T41, C42, T43, C44 };

std::string_view to_string(CaseId id);
/// Throws InvalidInput for unknown ids.
CaseId parse_case_id(std::string_view text);
const std::array<CaseId, 16>& all_cases();

/// Which form the scanned function takes: h with h(0) = 1, or f = z + ...
/// Family members are converted between the two with f = z h.
enum class FunctionRole { H, F };

FunctionRole case_role(CaseId id);
bool case_needs_partner(CaseId id);

/// Union of every parameter a statement quantifies over; each case reads the
/// fields it needs.
struct CaseParams {
  double alpha = 0.5;
  double beta = 0.25;
  double gamma = 1.0;
  double delta = 1.0;
  double lambda = 0.0;
  int n = 1;
  int p = 1;
  RegionKind region = RegionKind::Disk;
};

struct TheoremCase {
  CaseId id = CaseId::T31;
  CaseParams params;

  /// Parameters used by the regression scan for each case.
  static TheoremCase defaults(CaseId id);
};

/// Family scanned when no family is given: Mobius ratios on the coarse and
/// fine grids, sector powers and RANDOM_TAYLOR(7, 10, 50); the Section-4
/// radius cases add z/(1 - v z) and z (1 + u z)^e. Two-function cases use the
/// fine Mobius grid only.
std::vector<AnalyticFunction> default_family(CaseId id);

/// Extra members for the radius cases: z/(1 - v z), v in {-1, -0.9, ..., 1},
/// and z (1 + u z)^e, u in {-1, -0.5, 0.5, 1}, e in {-1, -0.5, 0.5, 1, 2}.
std::vector<AnalyticFunction> radius_extras();

/// Starlike partners g for the two-function cases: z, z/(1 - v z) for
/// v in {-0.5, 0.5, 0.9}, z/(1 - v z)^2 for v in {0.5, -0.9} and
/// z/(1 - i z)^a for a in {0.5, 1.5}; only members whose STARLIKE check HOLDS
/// on grid are kept.
std::vector<AnalyticFunction> default_partners(const DiskGrid& grid);

/// Outcome for one family member (or one (f, g) pair).
struct CaseRow {
  std::string function_id;
  bool evaluated = false;
  bool hypothesis_holds = false;
  double hyp_margin = 0.0;  // slit distance or region/band slack
  bool hyp_crossing = false;  // image polyline crosses a slit ray
  bool conclusion_checked = false;
  double concl_margin = 0.0;
  cplx concl_witness{0.0, 0.0};
  bool counterexample = false;
  std::string error;
};

struct Counterexample {
  std::string function_id;
  cplx witness;
  double margin;
};

struct VerificationReport {
  CaseId case_id = CaseId::T31;
  std::size_t cases_total = 0;
  std::size_t hypothesis_holds_count = 0;
  std::size_t evaluation_errors = 0;
  std::vector<Counterexample> conclusion_failures;
  std::vector<CaseRow> rows;
  double elapsed_seconds = 0.0;
};

/// Hypothesis threshold: a slit is avoided when every sample is farther than
/// eps from it and no ring polyline crosses it; regions and argument bands
/// need slack >= eps.
inline constexpr double kHypothesisEps = 1e-6;

/// Scans one member. g is required exactly for the two-function cases.
/// Evaluation errors are reported in the row, not thrown; invalid case
/// parameters throw.
CaseRow evaluate_member(const TheoremCase& c, const AnalyticFunction& f, const AnalyticFunction* g,
                        const DiskGrid& grid, double eps = kHypothesisEps);

/// Scans the family (and every (f, g) pair with the partners for the
/// two-function cases; default_partners(grid) when partners is empty).
/// A conclusion with negative minimum slack is a counterexample.
VerificationReport verify_theorem(const TheoremCase& c, const std::vector<AnalyticFunction>& family,
                                  const DiskGrid& grid, double eps = kHypothesisEps,
                                  const std::vector<AnalyticFunction>& partners = {});

/// Checks Re(e^{-i lambda} h) >= 0 for h = (1 + e^{i m pi} z)/(1 - b z) with
/// lambda = lambda_tilt(b, m). HOLDS iff the grid minimum is >= 0.
MembershipReport verify_lemma_tilt(double b, double m, const DiskGrid& grid);

}  // namespace gft
