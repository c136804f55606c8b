#include "irrcert/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace irrcert;
using namespace irrcert::testing;

TEST(Kronecker, Examples) {
  const auto r = kronecker_factor(Polynomial{-1, 0, 1});
  ASSERT_EQ(r.status, OracleStatus::reducible);
  EXPECT_EQ(r.g * r.h, Polynomial({-1, 0, 1}));

  EXPECT_EQ(kronecker_factor(Polynomial{1, 0, 1}).status, OracleStatus::irreducible);
  EXPECT_EQ(kronecker_factor(v_poly()).status, OracleStatus::irreducible);
  EXPECT_EQ(kronecker_factor(u_poly()).status, OracleStatus::irreducible);
}

TEST(Kronecker, FindsFactorsWithoutIntegerRoots) {
  // (x^2+1)(x^2+x+3) and (2x^2+3)(3x^3-x+5)
  const Polynomial a = Polynomial{1, 0, 1} * Polynomial{3, 1, 1};
  const auto ra = kronecker_factor(a);
  ASSERT_EQ(ra.status, OracleStatus::reducible);
  EXPECT_EQ(ra.g * ra.h, a);

  const Polynomial b = Polynomial{3, 0, 2} * Polynomial{5, -1, 0, 3};
  const auto rb = kronecker_factor(b);
  ASSERT_EQ(rb.status, OracleStatus::reducible);
  EXPECT_EQ(rb.g * rb.h, b);
  EXPECT_GE(rb.g.degree(), 1);
  EXPECT_GE(rb.h.degree(), 1);
}

TEST(Kronecker, RejectsBadInput) {
  EXPECT_THROW(kronecker_factor(Polynomial{2, 4, 2}), std::invalid_argument);
  EXPECT_THROW(kronecker_factor(Polynomial{1, 1}), std::invalid_argument);
}

TEST(Kronecker, BudgetExhaustionIsInconclusive) {
  const auto r = kronecker_factor(u_poly(), OracleBudget{3});
  EXPECT_EQ(r.status, OracleStatus::inconclusive);
}

TEST(Kronecker, ConstructedProductsAreAlwaysSplit) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> deg(1, 3);
  for (int i = 0; i < 500; ++i) {
    const long d1 = deg(rng);
    const long d2 = std::min<long>(deg(rng), 6 - d1);
    const Polynomial f = random_primitive(rng, d1, 50) * random_primitive(rng, d2, 50);
    const auto r = kronecker_factor(f);
    ASSERT_EQ(r.status, OracleStatus::reducible) << to_string(f);
    ASSERT_EQ(r.g * r.h, f);
    ASSERT_GE(r.g.degree(), 1);
    ASSERT_GE(r.h.degree(), 1);
  }
}

TEST(FloatRoots, Examples) {
  auto r = float_roots(Polynomial{1, 0, 1});
  ASSERT_EQ(r.size(), 2u);
  std::sort(r.begin(), r.end(), [](auto a, auto b) { return a.imag() < b.imag(); });
  EXPECT_NEAR(std::abs(r[0] - std::complex<double>(0, -1)), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(r[1] - std::complex<double>(0, 1)), 0.0, 1e-8);

  auto s = float_roots(Polynomial{-2, 0, 1});
  std::sort(s.begin(), s.end(), [](auto a, auto b) { return a.real() < b.real(); });
  EXPECT_NEAR(std::abs(s[0] + std::sqrt(2.0)), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(s[1] - std::sqrt(2.0)), 0.0, 1e-8);

  for (const auto& z : float_roots(u_poly())) EXPECT_LT(std::abs(z), 5.0);
  EXPECT_THROW(float_roots(Polynomial{3}), std::invalid_argument);
}

TEST(FloatRoots, RepeatedRoots) {
  // (x-1)^3 (x+2)
  const Polynomial f = Polynomial{-1, 1} * Polynomial{-1, 1} * Polynomial{-1, 1} * Polynomial{2, 1};
  const auto r = float_roots(f);
  ASSERT_EQ(r.size(), 4u);
  int near_one = 0;
  for (const auto& z : r) near_one += std::abs(z - 1.0) < 1e-4;
  EXPECT_EQ(near_one, 3);
}

TEST(FloatRoots, RootsLieInsideTheBound) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> deg(2, 10);
  for (int i = 0; i < 500; ++i) {
    const Polynomial f = random_poly(rng, deg(rng), 100);
    const double bound = root_bound(f).value().get_d() + 1.0 + 1e-6;
    for (const auto& z : float_roots(f)) ASSERT_LT(std::abs(z), bound) << to_string(f);
  }
}
