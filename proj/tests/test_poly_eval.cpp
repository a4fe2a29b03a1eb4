#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <random>

#include "reference_zeros.hpp"
#include "rgbp/poly_eval.hpp"

using namespace rgbp;

TEST(PolyEval, DegreeOne) {
  EXPECT_EQ(theta(1, 2.0, 3.0).value(), cplx(4.0));
  EXPECT_EQ(theta(1, 7.0, -3.5).value(), cplx(0.0));
}

TEST(PolyEval, QuadraticRoots) {
  // theta_2(z; 2) = z^2 + 3z + 3
  for (const cplx z : {cplx(-1.5, std::sqrt(3.0) / 2), cplx(-1.5, -std::sqrt(3.0) / 2)}) {
    EXPECT_LE(std::abs(theta(2, 2.0, z).value()), 1e-15);
  }
  EXPECT_EQ(theta(2, 2.0, 1.0).value(), cplx(7.0));
}

TEST(PolyEval, CoefficientsAreExact) {
  using boost::multiprecision::cpp_rational;
  for (int n = 1; n <= 12; ++n) {
    for (int a : {-3, 1, 2, 5, 20}) {
      if (n + a - 1 <= 0) continue;
      const PolyCoeffs pc = make_coeffs(n, a);
      cpp_rational c = 1;
      for (int k = 0; k <= n; ++k) {
        if (k > 0) c = c * (n - k + 1) * (n + a - 1 + (k - 1)) / (2 * k);
        const double got = static_cast<double>(pc.coefficient_ld(k));
        const double want = static_cast<double>(c);
        EXPECT_NEAR(got, want, 1e-15 * std::abs(want)) << "n " << n << " a " << a << " k " << k;
      }
    }
  }
}

TEST(PolyEval, ResidualAtReferenceZero) {
  const cplx t = rgbp_test::kReferenceA101[0].z();
  const double here = std::abs(theta(15, 1.01, t).value());
  const double near = std::abs(theta(15, 1.01, t + 0.1).value());
  EXPECT_LE(here, 1e-10 * near);
  EXPECT_LE(relative_residual(15, 1.01, t), 1e-15);
}

TEST(PolyEval, LaguerreRouteAgrees) {
  std::mt19937 rng(51);
  std::uniform_real_distribution<double> R(0.2, 1.5), A(0.0, 3.14159);
  for (auto [n, a] : {std::pair{5, 1.01}, {15, 20.2}, {30, 1.2}, {50, -18.5}, {100, 2.3}}) {
    for (int i = 0; i < 50; ++i) {
      // Sample where |theta| is not dominated by cancellation: beyond the zero curve.
      const cplx z = std::polar(n * R(rng) + 2.0, A(rng));
      const ThetaValue tv = theta_with_scale(n, a, z);
      const LaguerreValue lv = theta_laguerre(n, a, z);
      const double cond = std::exp2(tv.abs_sum.log2_abs() - tv.value.log2_abs());
      const double diff = std::exp2((tv.value - lv.theta).log2_abs() - tv.value.log2_abs());
      EXPECT_LE(diff, std::max(1e-11, 64 * n * 2.2e-16 * cond)) << "n " << n << " a " << a << " z " << z;
    }
  }
}

TEST(PolyEval, LargeDegreeStaysFinite) {
  const ScaledComplex v = theta(2000, 2.3, cplx(-300.0, 900.0));
  EXPECT_TRUE(std::isfinite(v.log2_abs()));
  EXPECT_GT(v.log2_abs(), 1024.0);  // beyond double range, carried in the exponent
}

TEST(PolyEval, W0DegreeOneZero) {
  EXPECT_EQ(w0(1, 3.0, cplx(-1.5, 0.0)), cplx(0.0));
  EXPECT_NE(std::abs(w0(1, 3.0, cplx(-1.4, 0.0))), 0.0);
  EXPECT_THROW(w0(1, 3.0, 0.0), ZeroArgument);
}

TEST(PolyEval, W0SolvesTheOde) {
  // w'' = {1 + (a-2)/z + (2n+a)(2n+a-2)/(4z^2)} w
  const double h = 1e-3;
  for (auto [n, a] : {std::pair{3, 1.01}, {6, 4.5}, {10, 2.0}}) {
    for (const cplx z : {cplx(2.0, 1.0), cplx(-1.5, 2.5), cplx(0.5, 3.0)}) {
      const cplx wm2 = w0(n, a, z - 2.0 * h), wm = w0(n, a, z - h), wc = w0(n, a, z), wp = w0(n, a, z + h),
                 wp2 = w0(n, a, z + 2.0 * h);
      const cplx d2 = (-wp2 + 16.0 * wp - 30.0 * wc + 16.0 * wm - wm2) / (12.0 * h * h);
      const cplx rhs = (1.0 + (a - 2.0) / z + (2.0 * n + a) * (2.0 * n + a - 2.0) / (4.0 * z * z)) * wc;
      EXPECT_LE(std::abs(d2 - rhs), 1e-6 * std::abs(rhs)) << "n " << n << " z " << z;
    }
  }
}

TEST(PolyEval, WOverDwMatchesDifferences) {
  const double h = 1e-6;
  for (const cplx z : {cplx(2.0, 1.0), cplx(-4.0, 6.0)}) {
    const cplx dw = (w0(12, 3.3, z + h) - w0(12, 3.3, z - h)) / (2.0 * h);
    const cplx q = w0(12, 3.3, z) / dw;
    EXPECT_LE(std::abs(w_over_dw(12, 3.3, z) - q), 1e-7 * std::abs(q));
  }
}

TEST(PolyEval, ScaledArithmetic) {
  const ScaledComplex x(cplx(3.0, 4.0), 2000), y(cplx(1.0, 0.0), -2000);
  EXPECT_NEAR((x * y).value().real(), 3.0, 1e-15);
  EXPECT_NEAR((x * y).value().imag(), 4.0, 1e-15);
  EXPECT_EQ((x - x).log2_abs(), -std::numeric_limits<double>::infinity());
  EXPECT_NEAR(x.log2_abs(), 2000.0 + std::log2(5.0), 1e-12);
  EXPECT_EQ((x + y).exp2, x.exp2);
  EXPECT_THROW(theta(-1, 1.0, 1.0), InvalidDegree);
}
