#include <gtest/gtest.h>

#include <random>

#include "gft/analytic_function.hpp"
#include "gft/error.hpp"

using gft::AnalyticFunction;
using gft::cplx;

namespace {

// z/(1 - z)
AnalyticFunction half_plane() { return AnalyticFunction::mobius(1, {{cplx{-1.0, 0.0}, -1.0}}); }

cplx random_point(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> r(0.05, rmax), t(0.0, 2.0 * gft::kPi);
  return std::polar(r(rng), t(rng));
}

template <class Fn>
gft::ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const gft::Error& e) {
    return e.code();
  }
  return gft::ErrorCode::InvalidInput;
}

}  // namespace

TEST(AnalyticFunction, MobiusValueAndDerivative) {
  const auto f = half_plane();
  EXPECT_NEAR(std::abs(f.eval({0.5, 0.0}, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f.eval({0.5, 0.0}, 1) - 4.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(f.eval({0.5, 0.0}, 2) - 16.0), 0.0, 1e-13);  // 2/(1-z)^3
}

TEST(AnalyticFunction, TaylorSecondDerivativeIsConstant) {
  const auto f = AnalyticFunction::taylor({0.0, 1.0, 1.0}, gft::NormalizationTag::a_class(1));
  EXPECT_NEAR(std::abs(f.eval({0.3, 0.1}, 2) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(gft::eval(f, {0.3, 0.1}, 1) - cplx{1.6, 0.2}), 0.0, 1e-15);
}

TEST(AnalyticFunction, OrderOutOfRange) {
  EXPECT_EQ(code_of([] { half_plane().eval({0.1, 0.0}, 3); }), gft::ErrorCode::OrderOutOfRange);
  EXPECT_EQ(code_of([] { half_plane().eval({0.1, 0.0}, -1); }), gft::ErrorCode::OrderOutOfRange);
}

TEST(AnalyticFunction, OutsideDiskRejected) {
  EXPECT_EQ(code_of([] { half_plane().eval({1.0, 0.0}, 0); }), gft::ErrorCode::OutOfRange);
}

TEST(AnalyticFunction, PoleAtOriginIsSingular) {
  const auto g = AnalyticFunction::mobius(-1, {});
  EXPECT_EQ(code_of([&] { g.eval({0.0, 0.0}, 0); }), gft::ErrorCode::SingularPoint);
}

TEST(AnalyticFunction, FactorOutsideClosedDiskRejected) {
  EXPECT_EQ(code_of([] { AnalyticFunction::mobius(1, {{cplx{1.5, 0.0}, 1.0}}); }), gft::ErrorCode::OutOfRange);
}

TEST(AnalyticFunction, TagValidation) {
  using gft::NormalizationTag;
  EXPECT_NO_THROW(AnalyticFunction::taylor({0.0, 0.0, 1.0, 0.3}, NormalizationTag::a_class(2)));
  EXPECT_EQ(code_of([] { AnalyticFunction::taylor({0.0, 2.0}, NormalizationTag::a_class(1)); }),
            gft::ErrorCode::InvalidInput);
  EXPECT_NO_THROW(AnalyticFunction::taylor({1.0, 0.0, 0.5}, NormalizationTag::h_class(1.0, 2)));
  EXPECT_EQ(code_of([] { AnalyticFunction::taylor({1.0, 0.1, 0.5}, NormalizationTag::h_class(1.0, 2)); }),
            gft::ErrorCode::InvalidInput);
}

TEST(AnalyticFunction, FiniteDifferencesMatchDerivatives) {
  std::mt19937_64 rng(2024);
  const std::vector<AnalyticFunction> fns = {
      half_plane(),
      AnalyticFunction::mobius(1, {{cplx{0.5, 0.2}, 1.0}, {cplx{-0.3, 0.4}, -1.5}}),
      AnalyticFunction::mobius(0, {{std::polar(1.0, 0.3 * gft::kPi), 0.75}, {cplx{-1.0, 0.0}, -0.75}}),
  };
  const double h = 1e-6;
  for (const auto& f : fns) {
    for (int i = 0; i < 200; ++i) {
      const cplx z = random_point(rng, 0.9);
      const gft::Jet j = f.jet(z);
      const cplx fd1 = (f.eval(z + h, 0) - f.eval(z - h, 0)) / (2.0 * h);
      const cplx fd2 = (f.eval(z + h, 1) - f.eval(z - h, 1)) / (2.0 * h);
      EXPECT_LE(std::abs(fd1 - j.d1), 1e-6 * std::max(1.0, std::abs(j.d1))) << f.label() << " z=" << z;
      EXPECT_LE(std::abs(fd2 - j.d2), 1e-6 * std::max(1.0, std::abs(j.d2))) << f.label() << " z=" << z;
    }
  }
}

TEST(AnalyticFunction, TaylorFromMobiusAgreesInsideRadiusSevenTenths) {
  std::mt19937_64 rng(99);
  const std::vector<AnalyticFunction> fns = {
      half_plane(),
      AnalyticFunction::mobius(1, {{cplx{0.5, 0.0}, 1.0}, {cplx{-0.5, 0.0}, -1.0}}),
      AnalyticFunction::mobius(0, {{cplx{0.0, 1.0}, 0.5}, {cplx{-1.0, 0.0}, -0.5}}),
  };
  for (const auto& f : fns) {
    const auto t = gft::taylor_from_mobius(f, 60);
    for (int i = 0; i < 200; ++i) {
      const cplx z = random_point(rng, 0.7);
      EXPECT_LE(std::abs(t.eval(z, 0) - f.eval(z, 0)), 1e-8 * std::max(1.0, std::abs(f.eval(z, 0)))) << z;
      // Differentiated tails decay like n^k 0.7^n, so derivatives are compared further in.
      const cplx w = 0.7 * z;
      for (int k = 1; k <= 2; ++k)
        EXPECT_LE(std::abs(t.eval(w, k) - f.eval(w, k)), 1e-8 * std::max(1.0, std::abs(f.eval(w, k)))) << w;
    }
  }
}

TEST(AnalyticFunction, ShiftMovesBetweenRoles) {
  const auto f = half_plane();
  const auto h = f.shifted(-1);  // 1/(1 - z)
  EXPECT_EQ(h.zero_order(), 0);
  EXPECT_NEAR(std::abs(h.eval({0.5, 0.0}, 0) - 2.0), 0.0, 1e-15);
  const auto t = AnalyticFunction::taylor({0.0, 1.0, 0.5}, gft::NormalizationTag::a_class(1));
  EXPECT_EQ(t.shifted(-1).zero_order(), 0);
  EXPECT_EQ(t.shifted(-1).shifted(1).taylor_series().coeffs, t.taylor_series().coeffs);
  EXPECT_THROW(h.shifted(-1), gft::Error);
}
