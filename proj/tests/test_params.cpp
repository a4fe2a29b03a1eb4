#include <gtest/gtest.h>

#include <random>

#include "rgbp/params.hpp"

using namespace rgbp;

TEST(Params, DegreeFifteen) {
  const ProblemParams p = make_params(15, 1.01);
  EXPECT_DOUBLE_EQ(p.u, 15.5);
  EXPECT_NEAR(p.alpha, -0.99 / 15.5, 1e-16);
  EXPECT_NEAR(p.sigma, std::sqrt(1.0 - 0.99 / 15.5), 1e-15);
  EXPECT_EQ(p.upper_count(), 8);
}

TEST(Params, SymmetricCase) {
  const ProblemParams p = make_params(1, 2.0);
  EXPECT_EQ(p.alpha, 0.0);
  EXPECT_EQ(p.sigma, 1.0);
  EXPECT_EQ(p.z1, cplx(0.0, 1.0));
  EXPECT_EQ(p.z2, cplx(0.0, -1.0));
}

TEST(Params, AlphaVanishesOnlyAtTwo) {
  for (int n : {1, 7, 100, 2000}) {
    EXPECT_EQ(make_params(n, 2.0).alpha, 0.0);
    EXPECT_NE(make_params(n, 2.0 + 1e-9).alpha, 0.0);
  }
}

TEST(Params, OutOfRange) {
  EXPECT_THROW(make_params(10, -20.0), ParameterOutOfRange);
  EXPECT_THROW(make_params(10, 100.5), ParameterOutOfRange);
  EXPECT_THROW(make_params(10, std::nan("")), ParameterOutOfRange);
  EXPECT_NO_THROW(make_params(10, 100.0));
  EXPECT_NO_THROW(make_params(10, -0.9 * 10 + 1.5));
  EXPECT_THROW(make_params(0, 1.0), InvalidDegree);
  EXPECT_THROW(make_params(-3, 1.0), InvalidDegree);
}

TEST(Params, AdmissibilityOverride) {
  EXPECT_NO_THROW(make_params(10, 150.0, Admissibility{0.9, 20.0}));
  EXPECT_THROW(make_params(10, -5.0, Admissibility{0.5, 10.0}), ParameterOutOfRange);
  EXPECT_THROW(make_params(10, 1.0, Admissibility{1.5, 10.0}), std::invalid_argument);
  EXPECT_THROW(make_params(10, 1.0, Admissibility{0.5, 0.0}), std::invalid_argument);
}

TEST(Params, TurningPointFactorisation) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> U(-5.0, 5.0);
  for (auto [n, a] : {std::pair{15, 1.01}, {30, 20.2}, {50, -18.5}, {7, 2.0}}) {
    const ProblemParams p = make_params(n, a);
    for (int i = 0; i < 100; ++i) {
      const cplx z(U(rng), U(rng));
      const cplx lhs = (z - p.z1) * (z - p.z2);
      const cplx w = z + 0.5 * p.alpha;
      const cplx rhs = w * w + 1.0 + p.alpha;
      EXPECT_LE(std::abs(lhs - rhs), 1e-14 * std::max(std::abs(rhs), 1.0));
    }
  }
}
