#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "gft/analytic_function.hpp"
#include "gft/constants.hpp"
#include "gft/disk_grid.hpp"

namespace gft {

enum class ClassKind { G, PTilt, U, R, Starlike, Convex, StronglyStarlike, MAlpha };

struct ClassSpec {
  ClassKind kind = ClassKind::Starlike;
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;

  /// -beta pi/2 < Arg h < alpha pi/2, alpha, beta in (-1, 1].
  static ClassSpec g(double alpha, double beta);
  /// Re(e^{i lambda} p) > 0. Pass -lambda for the rotated class P_{-lambda}.
  static ClassSpec p_tilt(double lambda);
  /// |f'(z/f)^{alpha+1} - 1| < lambda, lambda, alpha in (0, 1].
  static ClassSpec u(double lambda, double alpha);
  /// Re f(z)/z > 0.
  static ClassSpec r();
  static ClassSpec starlike();
  static ClassSpec convex();
  /// |Arg zf'/f| < alpha pi/2, alpha in (0, 1].
  static ClassSpec strongly_starlike(double alpha);
  /// Re(alpha (1 + zf''/f') + (1 - alpha) zf'/f) > 0, alpha >= 0.
  static ClassSpec m_alpha(double alpha);

  /// "G(0.5,0.25)", "P_TILT(-0.5)", "U(1,1)", "R", "STARLIKE", "CONVEX",
  /// "STRONGLY_STARLIKE(0.5)", "M_ALPHA(2)".
  std::string to_string() const;
};

/// Inverse of ClassSpec::to_string. Throws InvalidInput.
ClassSpec parse_class_spec(const std::string& text);

/// Signed slack of the class inequality at one point (positive inside).
/// Throws on evaluation failures.
double class_slack(const ClassSpec& spec, const AnalyticFunction& f, cplx z);

enum class Verdict { Holds, Fails, Undecided };

std::string_view to_string(Verdict v);

struct MembershipReport {
  Verdict verdict = Verdict::Undecided;
  double margin = 0.0;  // minimum slack over the grid (lambda - sup deviation for U)
  cplx witness{0.0, 0.0};
  std::size_t samples_checked = 0;
  std::string error;  // set for UNDECIDED
};

inline constexpr double kMembershipEps = 1e-9;

/// HOLDS iff the slack is >= eps at every grid point; FAILS otherwise. An
/// evaluation error stops the scan with UNDECIDED and the failing point as
/// witness.
MembershipReport check_membership(const ClassSpec& spec, const AnalyticFunction& f, const DiskGrid& grid,
                                  double eps = kMembershipEps);

// ---------------------------------------------------------------------------
// Slits and regions in the w-plane.

double distance_to_ray(cplx w, const Ray& ray);
double distance_to_slit(cplx w, const SlitSpec& slit);

struct SlitCheck {
  bool avoided = true;
  double min_distance = 0.0;
  cplx witness{0.0, 0.0};
};

/// avoided iff every value lies farther than eps from every ray.
SlitCheck slit_avoidance(std::span<const cplx> values, const SlitSpec& slit, double eps);

/// True when the closed polyline through the samples of one ring meets a ray.
/// Catches image curves that jump over a ray between two samples.
bool ring_crosses_slit(std::span<const cplx> ring, const SlitSpec& slit);

struct RegionCheck {
  bool contained = true;
  double margin = 0.0;
  cplx witness{0.0, 0.0};
};

/// contained iff region.slack(w) >= eps for every value.
RegionCheck region_containment(std::span<const cplx> values, const RegionSpec& region, double eps);

}  // namespace gft
