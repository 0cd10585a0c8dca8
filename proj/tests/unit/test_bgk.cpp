#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nsspec/bgk.hpp"
#include "nsspec/error.hpp"
#include "nsspec/halfline.hpp"
#include "nsspec/models.hpp"

using namespace nsspec;

namespace {

BoundaryData two_point_data() {
  return {1.0, {{Complex(1.0, 0.0), 2.0}, {Complex(-1.0, 0.0), 0.5}}, 0.5};
}

ZeroSet three_zeros() {
  return {{{Complex(0.5, 0.1), 1}, {Complex(-0.3, 0.6), 2}, {Complex(0.1, -0.8), 1}}};
}

ComplexMatrix scalar(Complex x) {
  ComplexMatrix m(1, 1);
  m(0, 0) = x;
  return m;
}

}  // namespace

TEST(ZeroSum, Examples) {
  const BoundaryData bd = two_point_data();
  EXPECT_EQ(zero_sum({}, bd), 0.0);
  EXPECT_DOUBLE_EQ(zero_sum({{{Complex(0.0, 0.0), 1}}}, bd), 1.0);

  const ZeroSet once = three_zeros();
  ZeroSet listed_twice = once;
  for (const auto& z : once.zeros) listed_twice.zeros.push_back(z);
  EXPECT_DOUBLE_EQ(zero_sum(listed_twice, bd), 2.0 * zero_sum(once, bd));
}

TEST(ZeroSum, Validation) {
  BoundaryData bd = two_point_data();
  EXPECT_THROW(zero_sum({{{Complex(1.0, 0.0), 1}}}, bd), DomainError);
  EXPECT_THROW(zero_sum({{{Complex(0.1, 0.0), 0}}}, bd), DomainError);
  bd.points.push_back({Complex(0.5, 0.0), 1.0});
  EXPECT_THROW(zero_sum({}, bd), DomainError);
  bd = two_point_data();
  bd.points.push_back(bd.points.front());
  EXPECT_THROW(zero_sum({}, bd), DomainError);
}

TEST(GrowthK, ConstantFunction) {
  EXPECT_EQ(growth_k([](Complex) { return Complex(1.0, 0.0); }, two_point_data()), 0.0);
}

TEST(GrowthK, ExponentialEnvelope) {
  const BoundaryData bd{0.0, {{Complex(1.0, 0.0), 1.0}}, 0.5};
  const double k = growth_k([](Complex z) { return std::exp(1.0 / (1.0 - z) - 1.0); }, bd);
  EXPECT_GT(k, 0.5);
  EXPECT_LE(k, 1.0);
}

TEST(GrowthK, RequiresUnitValueAtOrigin) {
  EXPECT_THROW(growth_k([](Complex) { return Complex(2.0, 0.0); }, two_point_data()), DomainError);
}

TEST(Blaschke, SingleZero) {
  const BlaschkeProduct h = blaschke_oracle({{{Complex(0.5, 0.0), 1}}});
  EXPECT_TRUE(h.normalized);
  EXPECT_LT(std::abs(h(0.5)), 1e-16);
  EXPECT_LT(std::abs(h(0.0) - 1.0), 1e-15);
  for (const Complex& z : polar_lattice(8, 16)) {
    const Complex expected = (0.5 - z) / (1.0 - 0.5 * z) / 0.5;
    EXPECT_LT(std::abs(h(z) - expected), 1e-13);
    EXPECT_LE(std::abs(h(z)), 2.0 + 1e-12);
  }
}

TEST(Blaschke, ModulusBoundAndFiniteSums) {
  const ZeroSet zs = three_zeros();
  const BlaschkeProduct h = blaschke_oracle(zs);
  double norm = 1.0;
  for (const auto& z : zs.zeros) norm *= std::pow(std::abs(z.z), z.multiplicity);
  for (const Complex& z : polar_lattice(16, 64)) EXPECT_LE(std::abs(h(z)) * norm, 1.0 + 1e-12);
  const BoundaryData bd = two_point_data();
  EXPECT_TRUE(std::isfinite(zero_sum(zs, bd)));
  const double k = growth_k(h, bd);
  EXPECT_TRUE(std::isfinite(k));
  EXPECT_GT(k, 0.0);
}

TEST(Blaschke, PowerConsistency) {
  const ZeroSet zs = three_zeros();
  ZeroSet doubled = zs;
  for (auto& z : doubled.zeros) z.multiplicity *= 2;
  const BoundaryData bd = two_point_data();
  const BlaschkeProduct h = blaschke_oracle(zs);
  const auto lattice = polar_lattice();
  const double k1 = growth_k(h, bd, lattice);
  const double k2 = growth_k([&](Complex z) { const Complex v = h(z); return v * v; }, bd, lattice);
  EXPECT_NEAR(zero_sum(doubled, bd), 2.0 * zero_sum(zs, bd), 1e-12 * zero_sum(zs, bd));
  EXPECT_NEAR(k2, 2.0 * k1, 1e-12 * k1);
}

TEST(Blaschke, ZeroAtOriginIsUnnormalized) {
  const BlaschkeProduct h = blaschke_oracle({{{Complex(0.0, 0.0), 1}, {Complex(0.5, 0.0), 1}}});
  EXPECT_FALSE(h.normalized);
  EXPECT_EQ(h(0.0), Complex(0.0, 0.0));
  EXPECT_THROW(growth_k(h, two_point_data()), DomainError);
}

TEST(ExponentIdentity, Grid) {
  for (int k = 0; k <= 60; ++k) {
    const double rho = -3.0 + 0.1 * k;
    for (double tau : {0.1, 0.3, 0.5, 0.7, 0.9}) EXPECT_TRUE(exponent_identity_holds(rho, tau)) << rho;
  }
}

TEST(Transfer, FreeModelHasNoTerms) {
  const ModelTriple model = build_abstract_model(2, 5, 0.0);
  const ExponentProfile prof = make_profile(2.0, 1.0, 0.5, 0.5, 0.5);
  const TransferReport t = sc3_to_sc4_transfer(model, prof, GrowthEnvelope{});
  EXPECT_EQ(t.disk_sum, 0.0);
  EXPECT_EQ(t.lambda_sum, 0.0);
  EXPECT_TRUE(t.pass);
}

TEST(Transfer, ScalarClosedForm) {
  // H = [-1] with a = 2: z = phi_inv(2, -1) = -1/3.
  const ModelTriple model = make_model(scalar(0.0), scalar(-1.0), 2.0, 2.0);
  const ExponentProfile prof = make_profile(2.0, 1.0, 0.5, 0.5, 0.5);
  const TransferReport t = sc3_to_sc4_transfer(model, prof, GrowthEnvelope{});
  ASSERT_EQ(t.terms.size(), 1u);
  const double disk = std::pow(2.0 / 3.0, 2.0 * prof.eta1) * std::pow(2.0 / 3.0, 2.0 * prof.eta2) *
                      std::pow(4.0 / 3.0, 2.0 * prof.eta0);
  const double constant =
      std::pow(2.0, prof.eta0 + prof.eta2 - 2.0 * prof.eta1) * std::pow(2.0, 2.0 * prof.eta0 + 2.0 * prof.eta1);
  const double lambda = constant / std::pow(5.0, prof.eta0 + 2.0 * prof.eta1 + prof.eta2);
  EXPECT_NEAR(t.terms[0].disk_term, disk, 1e-14);
  EXPECT_NEAR(t.terms[0].lambda_term, lambda, 1e-14);
  EXPECT_NEAR(t.constant, constant, 1e-14);
  EXPECT_LE(lambda, disk);
  EXPECT_TRUE(t.pass);
}

TEST(Transfer, SeededModels) {
  const ExponentProfile prof = make_profile(2.0, 1.0, 0.5, 0.5, 0.5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TransferReport t = sc3_to_sc4_transfer(build_abstract_model(seed, 20, 1.0), prof, GrowthEnvelope{});
    EXPECT_TRUE(t.pass) << seed;
    EXPECT_LE(t.lambda_sum, t.disk_sum * (1.0 + 1e-10));
  }
}
