#include <gtest/gtest.h>

#include "gft/error.hpp"
#include "gft/theorem_verify.hpp"

using gft::AnalyticFunction;
using gft::CaseId;
using gft::cplx;
using gft::TheoremCase;

namespace {

const gft::DiskGrid& coarse() {
  static const gft::DiskGrid g = gft::DiskGrid::coarse_profile();
  return g;
}

AnalyticFunction z_over(double v) { return AnalyticFunction::mobius(1, {{cplx{-v, 0.0}, -1.0}}); }

}  // namespace

TEST(CaseIds, RoundTrip) {
  for (CaseId id : gft::all_cases()) EXPECT_EQ(gft::parse_case_id(gft::to_string(id)), id);
  EXPECT_THROW(gft::parse_case_id("T99"), gft::Error);
  EXPECT_TRUE(gft::case_needs_partner(CaseId::C37I));
  EXPECT_FALSE(gft::case_needs_partner(CaseId::T35));
  EXPECT_EQ(gft::case_role(CaseId::T31), gft::FunctionRole::H);
  EXPECT_EQ(gft::case_role(CaseId::C33), gft::FunctionRole::F);
}

TEST(LemmaTilt, Examples) {
  const auto g = gft::DiskGrid::default_profile();
  for (double m : {-0.5, 0.0, 0.7}) {
    const auto r = gft::verify_lemma_tilt(0.0, m, g);
    EXPECT_EQ(r.verdict, gft::Verdict::Holds);
    EXPECT_NEAR(r.margin, 1.0 - 0.995, 1e-9);
  }
  const auto quarter = gft::verify_lemma_tilt(1.0, 0.5, g);
  EXPECT_EQ(quarter.verdict, gft::Verdict::Holds);
  EXPECT_GE(quarter.margin, 0.0);
  const auto slim = gft::verify_lemma_tilt(0.5, 0.9, g);
  EXPECT_EQ(slim.verdict, gft::Verdict::Holds);
  EXPECT_GE(slim.margin, 0.0);
  EXPECT_LT(slim.margin, 0.1);
  EXPECT_THROW(gft::verify_lemma_tilt(1.0, 1.0, g), gft::Error);
}

TEST(VerifyTheorem, HalfPlaneMapsPassTheFirstRadiusTheorem) {
  std::vector<AnalyticFunction> fam;
  for (int k = 0; k <= 20; ++k) fam.push_back(z_over(-1.0 + 0.1 * k));
  TheoremCase c{CaseId::T41, {}};
  c.params.lambda = 1.0;
  c.params.alpha = 1.0;
  const auto rep = gft::verify_theorem(c, fam, gft::DiskGrid::default_profile());
  EXPECT_EQ(rep.cases_total, 21u);
  EXPECT_EQ(rep.hypothesis_holds_count, 21u);
  EXPECT_TRUE(rep.conclusion_failures.empty());
}

TEST(VerifyTheorem, HalfPlaneMapAvoidsTheUnitSlit) {
  const auto f = z_over(1.0);
  const auto row = gft::evaluate_member(TheoremCase::defaults(CaseId::C33), f, nullptr,
                                        gft::DiskGrid::default_profile());
  EXPECT_TRUE(row.evaluated);
  EXPECT_TRUE(row.hypothesis_holds);
  EXPECT_TRUE(row.conclusion_checked);
  EXPECT_FALSE(row.counterexample);
  EXPECT_GT(row.concl_margin, 0.0);
}

TEST(VerifyTheorem, FailedHypothesisIsNotACounterexample) {
  TheoremCase c = TheoremCase::defaults(CaseId::T34);
  c.params.lambda = 0.0;
  const auto row = gft::evaluate_member(c, gft::sector_map(1.0, 0.0), nullptr, gft::DiskGrid::default_profile());
  EXPECT_TRUE(row.evaluated);
  EXPECT_EQ(row.conclusion_checked, row.hypothesis_holds);
  EXPECT_FALSE(row.counterexample);
}

TEST(VerifyTheorem, SlitReductionMatchesMixedFunctional) {
  // With h = (z f'/f)^(1 - lambda), h^(1/(1 - lambda)) + z h'/h is the MIXED
  // functional of f, so both cases must reach the same hypothesis verdict.
  struct Pair {
    AnalyticFunction f;
    AnalyticFunction h_base;  // z f'/f as a product
  };
  std::vector<Pair> pairs;
  for (double v : {-0.9, -0.5, 0.3, 0.8, 1.0}) {
    pairs.push_back({z_over(v), AnalyticFunction::mobius(0, {{cplx{-v, 0.0}, -1.0}})});
    pairs.push_back({AnalyticFunction::mobius(1, {{cplx{-v, 0.0}, -2.0}}),
                     AnalyticFunction::mobius(0, {{cplx{v, 0.0}, 1.0}, {cplx{-v, 0.0}, -1.0}})});
  }
  for (double u : {-0.5, 0.25, 0.5})
    pairs.push_back({AnalyticFunction::mobius(1, {{cplx{u, 0.0}, 1.0}}),
                     AnalyticFunction::mobius(0, {{cplx{2 * u, 0.0}, 1.0}, {cplx{u, 0.0}, -1.0}})});

  std::size_t holds = 0;
  for (double lambda : {0.0, 0.25, 0.5, 0.75}) {
    TheoremCase mixed{CaseId::C32, {}};
    mixed.params.lambda = lambda;
    TheoremCase slit{CaseId::T31, {}};
    slit.params.alpha = slit.params.beta = 1.0 - lambda;
    slit.params.n = 1;
    for (const auto& p : pairs) {
      const auto& base = p.h_base.mobius_product();
      std::vector<gft::MobiusFactor> scaled;
      for (const auto& fac : base.factors) scaled.push_back({fac.u, fac.exponent * (1.0 - lambda)});
      const auto h = AnalyticFunction::mobius(0, scaled);
      const auto a = gft::evaluate_member(mixed, p.f, nullptr, coarse());
      const auto b = gft::evaluate_member(slit, h, nullptr, coarse());
      ASSERT_TRUE(a.evaluated && b.evaluated) << a.error << b.error;
      EXPECT_EQ(a.hypothesis_holds, b.hypothesis_holds) << "lambda=" << lambda << " " << p.f.label();
      EXPECT_NEAR(a.hyp_margin, b.hyp_margin, 1e-9 * std::max(1.0, a.hyp_margin));
      holds += a.hypothesis_holds;
    }
  }
  EXPECT_GT(holds, 0u);
}

TEST(VerifyTheorem, DiskHypothesisImpliesSlitHypothesisAtZeroTilt) {
  TheoremCase disk = TheoremCase::defaults(CaseId::C38);
  disk.params.region = gft::RegionKind::Disk;
  disk.params.lambda = 0.0;
  TheoremCase slit{CaseId::T35, disk.params};
  const auto fam = gft::default_family(CaseId::C38);
  std::size_t holds = 0;
  for (const auto& f : fam) {
    const auto a = gft::evaluate_member(disk, f, nullptr, coarse());
    if (!a.hypothesis_holds) continue;
    ++holds;
    EXPECT_TRUE(gft::evaluate_member(slit, f, nullptr, coarse()).hypothesis_holds) << f.label();
  }
  EXPECT_GT(holds, 0u);

  // The same containment on the regions themselves.
  const auto t = gft::thm3_constants(1.0, 1.0, 1, 0.0);
  const auto d = gft::build_region(gft::RegionKind::Disk, t.x, t.y_min, 1, 1.0, 1.0);
  for (int i = 0; i <= 200; ++i)
    for (int j = 0; j <= 200; ++j) {
      const cplx w{-1.5 + 4.5 * i / 200.0, -3.5 + 7.0 * j / 200.0};
      if (d.slack(w) > 0.0) {
        EXPECT_GT(gft::distance_to_slit(w, t.slit), 0.0) << w;
      }
    }
}

TEST(VerifyTheorem, RectangleAndEllipseHypothesesAreVacuous) {
  for (auto kind : {gft::RegionKind::Rectangle, gft::RegionKind::Ellipse}) {
    TheoremCase c = TheoremCase::defaults(CaseId::C38);
    c.params.region = kind;
    c.params.lambda = 0.5;
    const auto rep = gft::verify_theorem(c, gft::default_family(CaseId::C38), coarse());
    EXPECT_EQ(rep.hypothesis_holds_count, 0u);
    EXPECT_TRUE(rep.conclusion_failures.empty());
  }
}

TEST(VerifyTheorem, DiskNeedsZeroTilt) {
  TheoremCase c = TheoremCase::defaults(CaseId::C38);
  c.params.region = gft::RegionKind::Disk;
  c.params.lambda = 0.3;
  EXPECT_THROW(gft::verify_theorem(c, {z_over(0.5)}, coarse()), gft::Error);
}

TEST(VerifyTheorem, PartnerRequired) {
  EXPECT_THROW(gft::evaluate_member(TheoremCase::defaults(CaseId::C37I), z_over(0.5), nullptr, coarse()), gft::Error);
  const auto partners = gft::default_partners(coarse());
  EXPECT_GE(partners.size(), 5u);
}

TEST(VerifyTheorem, AllCasesCleanOnCoarseGrid) {
  for (CaseId id : gft::all_cases()) {
    const auto rep = gft::verify_theorem(TheoremCase::defaults(id), gft::default_family(id), coarse());
    EXPECT_TRUE(rep.conclusion_failures.empty()) << gft::to_string(id) << " first: "
                                                 << (rep.conclusion_failures.empty()
                                                         ? std::string()
                                                         : rep.conclusion_failures.front().function_id);
    EXPECT_GT(rep.hypothesis_holds_count, 0u) << gft::to_string(id);
    EXPECT_EQ(rep.rows.size(), rep.cases_total);
  }
}

TEST(VerifyTheorem, BadNormalizationIsAnErrorRow) {
  const auto h = AnalyticFunction::taylor({2.0, 0.1}, gft::NormalizationTag::h_class(2.0, 1));
  const auto row = gft::evaluate_member(TheoremCase::defaults(CaseId::T34), h, nullptr, coarse());
  EXPECT_FALSE(row.evaluated);
  EXPECT_FALSE(row.hypothesis_holds);
  EXPECT_FALSE(row.error.empty());
  const auto rep = gft::verify_theorem(TheoremCase::defaults(CaseId::T34), {h}, coarse());
  EXPECT_EQ(rep.evaluation_errors, 1u);
}
