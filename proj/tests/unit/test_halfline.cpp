#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nsspec/error.hpp"
#include "nsspec/halfline.hpp"
#include "nsspec/rng.hpp"

using namespace nsspec;

namespace {
const Complex I{0.0, 1.0};
}

TEST(DistHalfline, Branches) {
  EXPECT_DOUBLE_EQ(dist_halfline(-1.0), 1.0);
  EXPECT_DOUBLE_EQ(dist_halfline(Complex(3.0, 4.0)), 4.0);
  EXPECT_DOUBLE_EQ(dist_halfline(Complex(-3.0, 4.0)), 5.0);
  EXPECT_DOUBLE_EQ(dist_halfline(Complex(2.0, 0.0)), 0.0);
}

TEST(SqrtUpper, Examples) {
  EXPECT_LT(std::abs(sqrt_upper(-1.0) - I), 1e-15);
  EXPECT_LT(std::abs(sqrt_upper(2.0 * I) - Complex(1.0, 1.0)), 1e-15);
  EXPECT_LT(std::abs(sqrt_upper(-4.0) - 2.0 * I), 1e-15);
  // lower half-plane: the branch still has Im > 0
  const Complex mu = sqrt_upper(Complex(1.0, -1.0));
  EXPECT_GT(mu.imag(), 0.0);
  EXPECT_LT(std::abs(mu * mu - Complex(1.0, -1.0)), 1e-15);
  EXPECT_THROW(sqrt_upper(3.0), DomainError);
}

TEST(Phi, Examples) {
  EXPECT_LT(std::abs(phi(2.0, 0.0) + 4.0), 1e-15);
  EXPECT_LT(std::abs(phi(1.0, 0.5) + 9.0), 1e-14);
  EXPECT_THROW(phi(1.0, 1.0), DomainError);
  EXPECT_THROW(phi(0.0, 0.5), DomainError);
}

TEST(PhiInv, Examples) {
  EXPECT_LT(std::abs(phi_inv(1.5, -2.25)), 1e-15);
  EXPECT_LT(std::abs(phi_inv(1.0, -9.0) - 0.5), 1e-15);
  EXPECT_LT(std::abs(phi_inv(1.0, 2.0 * I) - Complex(1.0, -2.0) / 5.0), 1e-15);
}

TEST(PhiInv, RoundTrip) {
  CounterRng rng(21, 3);
  for (int k = 0; k < 2000; ++k) {
    const double a = 0.1 + 10.0 * rng.uniform();
    const Complex lambda = std::polar(std::pow(10.0, rng.uniform(-2.0, 2.0)),
                                      rng.uniform(0.01, 2.0 * std::numbers::pi - 0.01));
    const Complex z = phi_inv(a, lambda);
    EXPECT_LT(std::abs(z), 1.0);
    EXPECT_LT(std::abs(phi(a, z) - lambda), 1e-12 * (1.0 + std::abs(lambda)));
  }
}

TEST(LemmaSq, Examples) {
  Bracket b = lemma_sq_check(I);
  EXPECT_DOUBLE_EQ(b.lower, 1.0);
  EXPECT_DOUBLE_EQ(b.value, 1.0);
  EXPECT_DOUBLE_EQ(b.upper, 2.0);
  EXPECT_TRUE(b.pass);

  b = lemma_sq_check(Complex(1.0, 1.0));
  EXPECT_NEAR(b.lower, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(b.value, 2.0, 1e-15);
  EXPECT_NEAR(b.upper, 2.0 * std::sqrt(2.0), 1e-15);
  EXPECT_TRUE(b.pass);
}

TEST(LemmaSq, SeededSweep) {
  CounterRng rng(1, 100);
  for (int k = 0; k < 10000; ++k) {
    const Complex mu(rng.uniform(-10.0, 10.0), std::pow(10.0, rng.uniform(-3.0, 1.0)));
    ASSERT_TRUE(lemma_sq_check(mu).pass) << mu;
  }
}

TEST(LemmaEse2, Examples) {
  auto b = lemma_ese2_check(1.0, -1.0);
  EXPECT_NEAR(b[0].value, 1.0, 1e-15);
  EXPECT_NEAR(b[1].value, 1.0, 1e-15);
  EXPECT_NEAR(b[2].value, 1.0, 1e-15);
  EXPECT_NEAR(b[0].lower, 0.25, 1e-15);
  EXPECT_NEAR(b[0].upper, 2.0, 1e-15);
  for (const auto& x : b) EXPECT_TRUE(x.pass);

  b = lemma_ese2_check(1.0, -9.0);
  EXPECT_NEAR(b[0].value, 0.5, 1e-15);
  EXPECT_NEAR(b[0].lower, 0.15, 1e-15);
  EXPECT_NEAR(b[0].upper, 1.2, 1e-14);
  for (const auto& x : b) EXPECT_TRUE(x.pass);
}

TEST(LemmaEse2, SeededSweep) {
  CounterRng rng(1, 101);
  for (int k = 0; k < 10000; ++k) {
    const double a = 0.1 * std::pow(100.0, rng.uniform());
    const Complex lambda = std::polar(std::pow(10.0, rng.uniform(-3.0, 3.0)),
                                      rng.uniform(1e-6, 2.0 * std::numbers::pi - 1e-6));
    for (const auto& x : lemma_ese2_check(a, lambda)) ASSERT_TRUE(x.pass) << a << " " << lambda;
  }
}
