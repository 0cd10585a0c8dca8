#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nsspec/error.hpp"
#include "nsspec/halfline.hpp"
#include "nsspec/models.hpp"
#include "nsspec/perturbation.hpp"
#include "nsspec/rng.hpp"

using namespace nsspec;

namespace {

ComplexMatrix scalar(Complex x) {
  ComplexMatrix m(1, 1);
  m(0, 0) = x;
  return m;
}

// 1x1 model H0 = [0], M = [m].
ModelTriple scalar_model(Complex m, double p, double a) {
  return make_model(scalar(0.0), scalar(m), p, a);
}

std::vector<Complex> mu_grid(std::uint64_t seed, int count) {
  CounterRng rng(seed, 1);
  std::vector<Complex> out;
  for (int k = 0; k < count; ++k)
    out.emplace_back(rng.uniform(-4.0, 4.0), 0.05 * std::pow(80.0, rng.uniform()));
  return out;
}

std::vector<Complex> disk_grid(std::uint64_t seed, int count, double radius) {
  CounterRng rng(seed, 2);
  std::vector<Complex> out;
  for (int k = 0; k < count; ++k)
    out.push_back(std::polar(radius * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform()));
  return out;
}

const std::vector<Complex> kSamples{Complex(-1.0, 0.0), Complex(-3.0, 2.0), Complex(0.5, 1.0),
                                    Complex(4.0, -0.3), Complex(-0.2, -5.0)};

}  // namespace

TEST(BigF, ZeroPerturbationAndBasePoint) {
  const ModelTriple model = build_abstract_model(4, 6, 0.0);
  PerturbationDeterminant pd(model);
  for (const Complex& l : kSamples) EXPECT_EQ(pd.big_f(l).norm(), 0.0);

  const PerturbationDeterminant pd2(build_abstract_model(4, 6, 1.0));
  const double a2 = pd2.model().a * pd2.model().a;
  EXPECT_EQ(pd2.big_f(-a2).norm(), 0.0);
}

TEST(BigF, ScalarClosedForm) {
  const double m = 0.7;
  const PerturbationDeterminant pd(scalar_model(m, 2.0, 1.0));
  for (const Complex& l : kSamples) {
    const Complex expected = m * (l + 1.0) / ((1.0 + m) * l);
    EXPECT_LT(std::abs(pd.big_f(l)(0, 0) - expected), 1e-14 * (1.0 + std::abs(expected)));
  }
  EXPECT_THROW(pd.big_f(2.0), DomainError);
}

TEST(LittleF, BaseValueIsExactlyOne) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PerturbationDeterminant pd(build_abstract_model(seed, 8, 1.0, 2.0 + 0.5 * (seed % 3)));
    const double a2 = pd.model().a * pd.model().a;
    EXPECT_EQ(pd.little_f(-a2), Complex(1.0, 0.0));
  }
}

TEST(LittleF, ZeroPerturbationIsOne) {
  const PerturbationDeterminant pd(build_abstract_model(9, 5, 0.0));
  for (const Complex& l : kSamples) EXPECT_LT(std::abs(pd.little_f(l) - 1.0), 1e-15);
}

TEST(LittleF, ScalarZeroAtEigenvalue) {
  // H = [-2]: F(-2) = 1 for every a, so f(-2) = 0 with p = 1.
  const PerturbationDeterminant pd(scalar_model(-2.0, 1.0, 2.0));
  EXPECT_EQ(pd.little_f(-2.0), Complex(0.0, 0.0));
  EXPECT_LT(std::abs(pd.little_f(-2.0, 0.0)), 1e-15);
  for (const Complex& l : kSamples) {
    const Complex big = -2.0 * (l + 4.0) / (2.0 * l);
    EXPECT_LT(std::abs(pd.little_f(l) - (1.0 - big)), 1e-14 * (1.0 + std::abs(big)));
  }
}

TEST(LittleF, AlternativeRepresentationAgrees) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PerturbationDeterminant pd(build_abstract_model(seed, 10, 1.0));
    EXPECT_LT(pd.resolvent_identity_residual(), 1e-12);
    for (const Complex& z : disk_grid(seed, 20, 0.95)) {
      const Complex l = phi(pd.model().a, z);
      if (std::abs(l + pd.model().a * pd.model().a) < 1e-8) continue;
      const Complex f1 = pd.little_f(l);
      const Complex f2 = pd.little_f_alternative(l);
      EXPECT_LE(std::abs(f1 - f2), 1e-9 * std::max(1.0, std::abs(f1)));
      EXPECT_LT(pd.product_form_residual(l), 1e-9);
    }
  }
}

TEST(LittleH, OriginAndScalarZero) {
  const PerturbationDeterminant pd(scalar_model(-2.0, 1.0, 2.0));
  EXPECT_EQ(pd.little_h(0.0), Complex(1.0, 0.0));
  EXPECT_LT(std::abs(pd.little_h(phi_inv(2.0, -2.0))), 1e-12);

  const PerturbationDeterminant free(build_abstract_model(2, 4, 0.0));
  for (const Complex& z : disk_grid(2, 20, 0.9)) EXPECT_LT(std::abs(free.little_h(z) - 1.0), 1e-15);
}

TEST(ZeroCorrespondence, ScalarAndFree) {
  const ZeroCorrespondence zc = zero_correspondence(PerturbationDeterminant(scalar_model(-2.0, 1.0, 2.0)));
  ASSERT_EQ(zc.discrete.size(), 1u);
  EXPECT_TRUE(zc.pass);

  const ZeroCorrespondence none = zero_correspondence(PerturbationDeterminant(build_abstract_model(1, 6, 0.0)));
  EXPECT_TRUE(none.discrete.empty());
  EXPECT_EQ(none.excluded.size(), 6u);
  EXPECT_TRUE(none.pass);
}

TEST(ZeroCorrespondence, SeededTwentyByTwenty) {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const ZeroCorrespondence zc = zero_correspondence(PerturbationDeterminant(build_abstract_model(seed, 20, 1.0)));
    EXPECT_TRUE(zc.pass) << "seed " << seed << " max |f| " << zc.max_abs_f_at_eigs;
  }
}

TEST(EstimateK, ZeroPerturbation) {
  const PerturbationDeterminant pd(build_abstract_model(3, 6, 0.0));
  const auto grid = mu_grid(3, 50);
  EXPECT_EQ(estimate_k(pd, 1.0, 0.5, 0.5, grid, EnvelopeKind::K0).k, 0.0);
  EXPECT_EQ(estimate_k(pd, 1.0, 0.5, 0.5, grid, EnvelopeKind::K1).k, 0.0);
  EXPECT_THROW(estimate_k(pd, 1.0, 0.5, 0.5, {}, EnvelopeKind::K0), DomainError);
}

TEST(EstimateK, HomogeneousOfDegreeP) {
  const ModelTriple base = build_abstract_model(12, 8, 1.0, 2.0);
  const ModelTriple twice = make_model(base.h0, 2.0 * base.m, 2.0, base.a);
  const auto grid = mu_grid(12, 60);
  const double k1 = estimate_k(PerturbationDeterminant(base), 1.0, 0.5, 0.5, grid, EnvelopeKind::K0).k;
  const double k2 = estimate_k(PerturbationDeterminant(twice), 1.0, 0.5, 0.5, grid, EnvelopeKind::K0).k;
  EXPECT_NEAR(k2 / k1, 4.0, 4e-10);
}

TEST(EstimateK, ScalarClosedForm) {
  const double m = 0.6;
  const PerturbationDeterminant pd(scalar_model(m, 1.0, 1.0));
  const auto grid = mu_grid(5, 40);
  double expected = 0.0;
  for (const Complex& mu : grid) expected = std::max(expected, m / ((1.0 + m) * std::abs(mu * mu)));
  const GrowthEnvelope env = estimate_k(pd, 0.0, 0.0, 0.0, grid, EnvelopeKind::K1);
  EXPECT_NEAR(env.k, expected, 1e-13 * expected);
}

TEST(LemmaBound, FreeScalarAndSeeded) {
  const auto grid = mu_grid(7, 100);
  {
    const PerturbationDeterminant pd(build_abstract_model(1, 5, 0.0));
    const auto env = estimate_k(pd, 1.0, 0.5, 0.5, grid, EnvelopeKind::K1);
    EXPECT_TRUE(lemma_bound_check(pd, env, grid).pass);
  }
  {
    const PerturbationDeterminant pd(scalar_model(0.8, 2.0, 1.0));
    const auto env = estimate_k(pd, 1.0, 0.5, 0.5, grid, EnvelopeKind::K1);
    const WorstSlack w = lemma_bound_check(pd, env, grid);
    EXPECT_EQ(w.points, grid.size());
    EXPECT_TRUE(w.pass) << w.worst;
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PerturbationDeterminant pd(build_abstract_model(seed, 10, 1.0));
    const auto env = estimate_k(pd, 1.0, 0.5, 0.5, grid, EnvelopeKind::K1);
    EXPECT_TRUE(lemma_bound_check(pd, env, grid).pass) << seed;
  }
}

TEST(LemmaBh, SeededDisk) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PerturbationDeterminant pd(build_abstract_model(seed, 10, 1.0));
    const auto disk = disk_grid(seed, 200, 0.95);
    const auto env = estimate_k(pd, 1.0, 0.5, 0.5, disk_to_mu_grid(pd.model().a, disk), EnvelopeKind::K1);
    const WorstSlack w = lemma_bh_check(pd, env, disk);
    EXPECT_TRUE(w.pass) << seed << " " << w.worst;
  }
}

TEST(LemmaBh, OriginIsConsistent) {
  const PerturbationDeterminant pd(build_abstract_model(3, 6, 1.0));
  const std::vector<Complex> origin{0.0};
  const auto env = estimate_k(pd, 1.0, 0.5, 0.5, mu_grid(3, 30), EnvelopeKind::K1);
  EXPECT_TRUE(lemma_bh_check(pd, env, origin).pass);
}

TEST(MultiplicityProbe, DoubleEigenvalue) {
  ComplexMatrix h0 = ComplexMatrix::Identity(2, 2);
  ComplexMatrix m = -3.0 * ComplexMatrix::Identity(2, 2);
  const PerturbationDeterminant pd(make_model(h0, m, 2.0));
  const MultiplicityProbe probe = multiplicity_probe(pd, -2.0);
  EXPECT_LT(probe.abs_f, 1e-12);
  EXPECT_LT(probe.abs_df, 1e-6 * probe.abs_d2f);
  EXPECT_GT(probe.abs_d2f, 1e-3);
}

TEST(Model, ValidationRejectsBadTriples) {
  ModelTriple model = build_abstract_model(1, 4, 1.0);
  model.a = std::sqrt(model.omega0) * 0.5;
  EXPECT_THROW(validate_model(model), DomainError);
  model = build_abstract_model(1, 4, 1.0);
  model.h(0, 0) += 1.0;
  EXPECT_THROW(validate_model(model), DomainError);
}
