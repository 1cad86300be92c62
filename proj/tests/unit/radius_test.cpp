#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "gft/constants.hpp"
#include "gft/error.hpp"
#include "gft/functional.hpp"
#include "gft/radius.hpp"
#include "gft/theorem_verify.hpp"

using gft::AnalyticFunction;
using gft::ClassSpec;
using gft::cplx;

namespace {

AnalyticFunction half_plane() { return AnalyticFunction::mobius(1, {{cplx{-1.0, 0.0}, -1.0}}); }
AnalyticFunction koebe() { return AnalyticFunction::mobius(1, {{cplx{-1.0, 0.0}, -2.0}}); }

// Smallest sampled radius at which Re(1 + z f''/f') <= 0 somewhere, scanning
// the disk on a dense polar lattice.
double scan_convexity_radius(const AnalyticFunction& f, double step, int angles) {
  for (double r = step; r < 1.0; r += step)
    for (int k = 0; k < angles; ++k) {
      const cplx z = std::polar(r, 2.0 * gft::kPi * k / angles);
      if (gft::evaluate_functional(gft::FunctionalSpec::convex(), f, nullptr, z).real() <= 0.0) return r;
    }
  return 1.0;
}

}  // namespace

TEST(PolyRoot, Examples) {
  const std::array<double, 3> p11 = {1.0, -5.0, -2.0};
  EXPECT_NEAR(gft::poly_root_bisect(p11, 0.0, 1.0), (-5.0 + std::sqrt(33.0)) / 4.0, 1e-12);
  const std::array<double, 2> lin = {1.0, -2.0};
  EXPECT_NEAR(gft::poly_root_bisect(lin, 0.0, 1.0), 0.5, 1e-12);
  const std::array<double, 3> p00 = {1.0, -3.0, -1.0};
  EXPECT_NEAR(gft::poly_root_bisect(p00, 0.0, 1.0), (-3.0 + std::sqrt(13.0)) / 2.0, 1e-12);
  EXPECT_NEAR(gft::poly_eval(p11, 0.5), 1.0 - 2.5 - 0.5, 1e-15);
}

TEST(PolyRoot, Errors) {
  const std::array<double, 2> pos = {1.0, 1.0};
  try {
    gft::poly_root_bisect(pos, 0.0, 1.0);
    FAIL();
  } catch (const gft::Error& e) {
    EXPECT_EQ(e.code(), gft::ErrorCode::NoSignChange);
  }
  EXPECT_THROW(gft::poly_root_bisect(pos, 1.0, 0.0), gft::Error);
}

TEST(PolyRoot, MatchesClosedFormsOnTheGrid) {
  for (double l : {0.1, 0.25, 0.5, 0.75, 1.0})
    for (double a : {0.1, 0.25, 0.5, 0.75, 1.0}) {
      EXPECT_NEAR(gft::poly_root_bisect(gft::convexity_polynomial(l, a), 0.0, 1.0), gft::radius_convexity(l, a),
                  1e-10);
      EXPECT_NEAR(gft::poly_root_bisect(gft::inv_alpha_polynomial(l, a), 0.0, 1.0),
                  gft::radius_inv_alpha_convexity(l, a), 1e-10);
    }
}

TEST(PropertyRadius, HalfPlaneMapIsConvexEverywhere) {
  EXPECT_DOUBLE_EQ(gft::property_radius(half_plane(), ClassSpec::convex()), 1.0 - gft::kRadiusTol);
}

TEST(PropertyRadius, KoebeFunction) {
  EXPECT_DOUBLE_EQ(gft::property_radius(koebe(), ClassSpec::starlike()), 1.0 - gft::kRadiusTol);
  const double rc = gft::property_radius(koebe(), ClassSpec::convex());
  EXPECT_NEAR(rc, 2.0 - std::sqrt(3.0), 2 * gft::kRadiusTol);
  EXPECT_NEAR(rc, scan_convexity_radius(koebe(), 1e-4, 720), 2 * gft::kRadiusTol);
}

TEST(PropertyRadius, ZMinusZSquared) {
  const auto f = AnalyticFunction::taylor({0.0, 1.0, -1.0}, gft::NormalizationTag::a_class(1));
  const double rc = gft::property_radius(f, ClassSpec::convex());
  EXPECT_NEAR(rc, 0.25, 2 * gft::kRadiusTol);
  EXPECT_NEAR(rc, scan_convexity_radius(f, 1e-4, 720), 2 * gft::kRadiusTol);
}

TEST(PropertyRadius, RingMarginNeedsAReProperty) {
  EXPECT_THROW(gft::ring_margin(koebe(), ClassSpec::r(), 0.5, 64), gft::Error);
}

TEST(FamilyRadius, SingleMemberAndEmptyFamily) {
  const auto r = gft::family_property_radius({half_plane().with_label("half-plane")}, ClassSpec::convex());
  EXPECT_DOUBLE_EQ(r.radius, 1.0 - gft::kRadiusTol);
  EXPECT_EQ(r.witness, "half-plane");
  EXPECT_THROW(gft::family_property_radius({}, ClassSpec::convex()), gft::Error);
}

TEST(FamilyRadius, EnvelopeIsAboveTheGuaranteedRadius) {
  // Radii depend only on the member and the property, so they are computed
  // once and compared against every (lambda, alpha) whose filter admits the member.
  const auto grid = gft::DiskGrid::default_profile();
  const auto family = gft::default_family(gft::CaseId::T41);
  const std::array<double, 4> params = {0.25, 0.5, 0.75, 1.0};
  std::vector<char> in_r(family.size(), 0);
  for (std::size_t i = 0; i < family.size(); ++i)
    in_r[i] = family[i].zero_order() == 1 &&
              gft::check_membership(ClassSpec::r(), family[i], grid).verdict == gft::Verdict::Holds;
  std::vector<double> conv(family.size(), -1.0);
  std::vector<std::array<double, 4>> inv(family.size(), {-1.0, -1.0, -1.0, -1.0});
  std::size_t members = 0;
  for (double l : params)
    for (std::size_t ai = 0; ai < params.size(); ++ai) {
      const double a = params[ai];
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (!in_r[i] || gft::check_membership(ClassSpec::u(l, a), family[i], grid).verdict != gft::Verdict::Holds)
          continue;
        ++members;
        if (conv[i] < 0.0) conv[i] = gft::property_radius(family[i], ClassSpec::convex());
        if (inv[i][ai] < 0.0) inv[i][ai] = gft::property_radius(family[i], ClassSpec::m_alpha(1.0 / a));
        EXPECT_GE(conv[i], gft::radius_convexity(l, a) - 2 * gft::kRadiusTol) << l << "," << a << family[i].label();
        EXPECT_GE(inv[i][ai], gft::radius_inv_alpha_convexity(l, a) - 2 * gft::kRadiusTol)
            << l << "," << a << family[i].label();
      }
    }
  EXPECT_GT(members, 0u);
}

TEST(WellKnownEstimates, CaratheodoryLogDerivative) {
  for (double u = 0.0; u <= 1.0; u += 0.25)
    for (double v = 0.0; v <= 1.0; v += 0.25)
      for (int k = 1; k <= 9; ++k) EXPECT_GE(gft::psi_estimate_margin(u, v, 0.1 * k), -1e-9) << u << "," << v;
}

TEST(WellKnownEstimates, ConstantSchwarzFactor) {
  for (double rho : {0.0, 0.5, 1.0})
    for (int t = 0; t < 12; ++t)
      for (int k = 1; k <= 9; ++k)
        EXPECT_GE(gft::phi_estimate_margin(std::polar(rho, 2.0 * gft::kPi * t / 12), 0.1 * k), -1e-9);
}
