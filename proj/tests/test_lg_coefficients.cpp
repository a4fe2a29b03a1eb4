#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rgbp/conformal_map.hpp"
#include "rgbp/lg_coefficients.hpp"

using namespace rgbp;

namespace {

using rgbp_test::G_direct;
using rgbp_test::params_for_alpha;

cplx E1_direct(double al, cplx phi) {
  const cplx s = std::sin(phi), c = std::cos(phi);
  return s * (5.0 * c * c - 2.0) / (24.0 * std::sqrt(1.0 + al)) +
         al * (c * (5.0 * c * c - 6.0) + 1.0) / (48.0 * (1.0 + al));
}

cplx E2_direct(double al, cplx phi) {
  const cplx s = std::sin(phi), c = std::cos(phi);
  const cplx c2 = c * c, c4 = c2 * c2;
  return al * s * s * s * c * (3.0 - 5.0 * c2) / (16.0 * std::pow(1.0 + al, 1.5)) +
         s * s * (5.0 * (4.0 - al * al + 4.0 * al) * c4 + (7.0 * al * al - 16.0 * al - 16.0) * c2 - 2.0 * al * al) /
             (64.0 * (1.0 + al) * (1.0 + al));
}

}  // namespace

TEST(LgCoefficients, GExamples) {
  const PhiSeries G0 = coeff_G(params_for_alpha(0.0));
  const cplx phi(0.7, 0.2);
  EXPECT_LE(std::abs(evaluate(G0, phi) - std::cos(phi) * std::pow(std::sin(phi), 2) / 2.0), 1e-15);
  EXPECT_EQ(evaluate(G0, cplx(0.0)), cplx(0.0));
  EXPECT_NEAR(evaluate(coeff_G(params_for_alpha(1.0)), cplx(std::numbers::pi / 2)).real(), -1.0 / 8.0, 1e-15);
}

TEST(LgCoefficients, E1AtQuarterTurn) {
  const auto E = coeff_E(params_for_alpha(0.0), 1);
  EXPECT_NEAR(evaluate(E[1], cplx(std::numbers::pi / 2)).real(), -1.0 / 12.0, 1e-15);
}

TEST(LgCoefficients, ClosedFormsMatchDirectFormulas) {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> A(-0.85, 9.0), U(-1.2, 1.2);
  for (int i = 0; i < 20; ++i) {
    const double al = A(rng);
    const cplx phi(U(rng), U(rng));
    const auto E = coeff_E(params_for_alpha(al), 2);
    const cplx e1 = E1_direct(al, phi), e2 = E2_direct(al, phi);
    EXPECT_LE(std::abs(evaluate(E[1], phi) - e1), 1e-13 * std::max(1.0, std::abs(e1)));
    EXPECT_LE(std::abs(evaluate(E[2], phi) - e2), 1e-13 * std::max(1.0, std::abs(e2)));
  }
}

TEST(LgCoefficients, VanishAtZero) {
  for (double al : {-0.85, -0.06, 0.0, 0.6, 9.0}) {
    const auto E = coeff_E(params_for_alpha(al), 7);
    for (int s = 1; s <= 7; ++s) {
      EXPECT_LE(std::abs(evaluate(E[s], cplx(0.0))), 1e-14) << "alpha " << al << " s " << s;
    }
  }
}

// E_{s+1} = G E_s' + int_0^phi G sum_j E_j' E_{s-j}', evaluated with
// quadrature and contour derivatives of the lower-order coefficients.
TEST(LgCoefficients, RecursionMatchesQuadrature) {
  std::mt19937 rng(22);
  std::uniform_real_distribution<double> A(-0.8, 5.0), U(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double al = A(rng);
    const cplx phi(U(rng), 0.5 * U(rng));
    const auto E = coeff_E(params_for_alpha(al), 7);
    for (int s = 2; s <= 6; ++s) {
      const cplx ref = rgbp_test::E_by_quadrature(E, al, s + 1, phi);
      const cplx got = evaluate(E[s + 1], phi);
      EXPECT_LE(std::abs(got - ref), 1e-10 * std::max(1.0, std::abs(ref)))
          << "alpha " << al << " phi " << phi << " s " << s + 1;
    }
  }
}

// Odd-index coefficients carry exactly one even-degree term, the constant
// -d_s; after adding d_s each E_s has a single trig-degree parity.
TEST(LgCoefficients, ParityAfterAddingD) {
  for (double al : {-0.5, -0.06, 0.0, 0.4, 3.0}) {
    const ProblemParams p = params_for_alpha(al);
    const LgTable t = make_lg_table(p);
    for (int s = 1; s <= 7; ++s) {
      const PhiSeries Es = t.E[s] + PhiSeries::constant(t.d_const[s]);
      double scale = 0.0, wrong = 0.0;
      for (const auto& [mono, c] : Es.terms()) {
        scale = std::max(scale, std::abs(c));
        if (mono.phi > 0 || (mono.sin + mono.cos) % 2 != s % 2) wrong = std::max(wrong, std::abs(c));
      }
      EXPECT_LE(wrong, 1e-13 * scale) << "alpha " << al << " s " << s;
    }
  }
}

TEST(LgCoefficients, ConstantsA) {
  EXPECT_EQ(const_a(1), rational(5, 72));
  EXPECT_EQ(const_atilde(1), rational(-7, 72));
  EXPECT_EQ(const_a(2), rational(5, 72));
  EXPECT_EQ(const_a(3), rational(1105, 10368));
  EXPECT_EQ(const_atilde(3), rational(-1463, 10368));
  for (int s = 2; s <= 8; ++s) {
    rational next = rational(s + 1) * const_a(s) / 2;
    for (int j = 1; j <= s - 1; ++j) next += const_a(j) * const_a(s - j) / 2;
    EXPECT_EQ(const_a(s + 1), next) << s;
  }
  EXPECT_THROW(const_a(0), std::invalid_argument);
}

TEST(LgCoefficients, ConstantsD) {
  EXPECT_EQ(const_d(0.0, 1), 0.0);
  EXPECT_DOUBLE_EQ(const_d(1.0, 1), -1.0 / 96.0);
  for (int s : {3, 5, 7}) EXPECT_EQ(const_d(0.0, s), 0.0);
  EXPECT_THROW(const_d(0.3, 2), std::invalid_argument);
  EXPECT_THROW(const_d(0.3, 9), std::invalid_argument);
}

// The d's are the coefficients of a log-gamma expansion; the truncation after
// u^-7 must leave an O(u^-9) remainder.
TEST(LgCoefficients, DSumRemainderScaling) {
  auto remainder = [](double u) { return rgbp_test::d_series_remainder(0.5, u); };
  const double r50 = remainder(50.0), r100 = remainder(100.0);
  const double ratio = r100 / r50;
  EXPECT_GE(ratio, std::ldexp(1.0, -10));
  EXPECT_LE(ratio, std::ldexp(1.0, -8));
}

TEST(LgCoefficients, GIsHalfTheAngleRate) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> X(0.3, 3.0), Y(0.05, 3.0);
  for (auto [n, a] : {std::pair{30, 1.01}, {30, 20.2}, {50, -10.0}}) {
    const ProblemParams p = make_params(n, a);
    const PhiSeries G = coeff_G(p);
    for (int i = 0; i < 20; ++i) {
      const double lo = std::min(0.0, -0.5 * p.alpha), hi = std::max(0.0, -0.5 * p.alpha);
      const double re = (i % 2) ? hi + X(rng) : lo - X(rng);
      const MapState st = map_point(p, cplx(re, Y(rng)));
      const cplx lhs = evaluate(G, st.phi);
      const cplx rhs = -st.d_phi / (2.0 * st.d_xi);
      EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs))) << st.z;
    }
  }
}

TEST(LgCoefficients, TableContents) {
  const LgTable t = make_lg_table(make_params(30, 1.01));
  EXPECT_EQ(t.s_max(), 7);
  EXPECT_EQ(t.a_const[3], rational(1105, 10368));
  EXPECT_EQ(t.d_const[2], 0.0);
  EXPECT_DOUBLE_EQ(t.d_const[1], const_d(t.alpha, 1));
}
