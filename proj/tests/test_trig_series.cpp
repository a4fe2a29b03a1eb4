#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_complex.hpp>

#include <numbers>
#include <random>

#include "rgbp/trig_series.hpp"

using namespace rgbp;

namespace {

using P = PhiSeries;
using cplx = std::complex<double>;
const cplx I{0.0, 1.0};

P S(int m) { return P::sin_power(m); }
P C(int j) { return P::cos_power(j); }
P Phi(int k) { return P::phi_power(k); }

bool close(const P& p, const P& q, double tol = 1e-14) {
  const P d = p - q;
  for (const auto& [mono, c] : d.terms()) {
    if (std::abs(c) > tol) return false;
  }
  return true;
}

P random_series(std::mt19937& rng) {
  std::uniform_int_distribution<int> k(0, 2), m(0, 5), j(0, 3), count(1, 5);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  P p;
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) p += P::monomial(k(rng), m(rng), j(rng), cplx(c(rng), c(rng)));
  return p;
}

}  // namespace

TEST(TrigSeries, Add) {
  EXPECT_EQ(S(1) + S(1), P::monomial(0, 1, 0, 2.0));
  const P p = S(3) * Phi(1) + C(1);
  EXPECT_EQ(p + P(), p);
  EXPECT_TRUE(close(C(2) + S(2), P::constant(1.0)));
  EXPECT_EQ((C(2) + S(2)).size(), 1u);
}

TEST(TrigSeries, Multiply) {
  EXPECT_EQ(S(1) * C(1), P::monomial(0, 1, 1));
  EXPECT_EQ(S(1) * S(1), S(2));
  EXPECT_EQ(Phi(1) * S(1), P::monomial(1, 1, 0));
  // cos * cos folds into 1 - sin^2
  EXPECT_EQ(C(1) * C(1), P::constant(1.0) - S(2));
}

TEST(TrigSeries, CanonicalFormHasNoHighCosPowers) {
  const P p = C(5) * S(2) + C(4) * Phi(2);
  for (const auto& [mono, c] : p.terms()) EXPECT_LE(mono.cos, 1);
}

TEST(TrigSeries, Differentiate) {
  EXPECT_EQ(differentiate(S(1)), C(1));
  EXPECT_TRUE(close(differentiate(P::monomial(1, 1, 0)), S(1) + P::monomial(1, 0, 1)));
  EXPECT_TRUE(close(differentiate(S(3)), P::monomial(0, 2, 1, 3.0)));
  EXPECT_TRUE(differentiate(P::constant(4.0)).empty());
}

TEST(TrigSeries, Integrate) {
  EXPECT_TRUE(close(integrate(C(1)), S(1)));
  EXPECT_TRUE(close(integrate(S(2)), Phi(1) * 0.5 - P::monomial(0, 1, 1, 0.5)));
  EXPECT_TRUE(close(integrate(P::monomial(1, 0, 1)), P::monomial(1, 1, 0) + C(1) - P::constant(1.0)));
}

TEST(TrigSeries, Evaluate) {
  const double pi = std::numbers::pi;
  EXPECT_NEAR(std::abs(evaluate(S(1), cplx(pi / 2)) - 1.0), 0.0, 1e-16);
  EXPECT_EQ(evaluate(P::monomial(1, 1, 0), cplx(0.0)), cplx(0.0));

  // sin(i)^2 = -sinh(1)^2, reference from a 50-digit complex sine.
  using mpc = boost::multiprecision::cpp_complex_50;
  const mpc s = sin(mpc(0, 1));
  const mpc ref = s * s;
  const cplx got = evaluate(S(2), I);
  EXPECT_NEAR(got.real(), static_cast<double>(ref.real()), 1e-15);
  EXPECT_NEAR(got.imag(), static_cast<double>(ref.imag()), 1e-15);
  EXPECT_NEAR(got.real(), -1.3810978455418157, 1e-15);
}

TEST(TrigSeries, DifferentiateUndoesIntegrate) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const P p = random_series(rng);
    const P back = differentiate(integrate(p));
    double scale = 1.0;
    for (const auto& [mono, c] : p.terms()) scale = std::max(scale, std::abs(c));
    EXPECT_TRUE(close(back, p, 1e-12 * scale)) << "sample " << i;
  }
}

TEST(TrigSeries, AntiderivativeVanishesAtZero) {
  std::mt19937 rng(8);
  for (int i = 0; i < 200; ++i) {
    const P F = integrate(random_series(rng));
    // At phi = 0 only the constant and the pure cosine terms survive; the
    // constant term cancels them exactly.
    cplx at_zero = 0.0;
    for (const auto& [mono, c] : F.terms()) {
      if (mono.phi == 0 && mono.sin == 0) at_zero += c;
    }
    EXPECT_EQ(at_zero, cplx(0.0)) << "sample " << i;
    EXPECT_EQ(evaluate(F, cplx(0.0)), cplx(0.0)) << "sample " << i;
  }
}

TEST(TrigSeries, EvaluationIsMultiplicative) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  for (int i = 0; i < 200; ++i) {
    const P p = random_series(rng), q = random_series(rng);
    const cplx phi(U(rng), U(rng));
    const cplx lhs = evaluate(multiply(p, q), phi);
    const cplx rhs = evaluate(p, phi) * evaluate(q, phi);
    EXPECT_LE(std::abs(lhs - rhs), 1e-13 * std::max(std::abs(rhs), 1.0)) << "sample " << i;
  }
}

TEST(TrigSeries, EvaluateMatchesDirectFormula) {
  std::mt19937 rng(10);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  for (int i = 0; i < 50; ++i) {
    const cplx phi(U(rng), U(rng));
    const cplx direct = phi * phi * std::pow(std::sin(phi), 3) * std::cos(phi) + 2.0 * std::pow(std::cos(phi), 4);
    const P p = P::monomial(2, 3, 1) + P::monomial(0, 0, 4, 2.0);
    EXPECT_LE(std::abs(evaluate(p, phi) - direct), 1e-13 * std::max(1.0, std::abs(direct)));
  }
}
