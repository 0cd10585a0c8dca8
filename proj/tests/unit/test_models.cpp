#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nsspec/error.hpp"
#include "nsspec/models.hpp"
#include "nsspec/rng.hpp"

using namespace nsspec;

namespace {

std::vector<double> sorted_real_eigs(const ComplexMatrix& a) {
  std::vector<double> out;
  for (const Complex& l : eigenvalue_list(a)) out.push_back(l.real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Laplacian, OneDimensionalSpectrum) {
  const auto eigs = sorted_real_eigs(build_laplacian({1, 3, 1.0}));
  const std::vector<double> expected{2.0 - std::sqrt(2.0), 2.0, 2.0 + std::sqrt(2.0)};
  ASSERT_EQ(eigs.size(), 3u);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(eigs[k], expected[k], 1e-13);
}

TEST(Laplacian, KroneckerSumInTwoDimensions) {
  const GridSpec g{2, 2, 0.7};
  const ComplexMatrix lap = build_laplacian(g);
  ASSERT_EQ(lap.rows(), 4);
  const auto one = sorted_real_eigs(build_laplacian({1, 2, 0.7}));
  std::vector<double> sums;
  for (double x : one)
    for (double y : one) sums.push_back(x + y);
  std::sort(sums.begin(), sums.end());
  const auto eigs = sorted_real_eigs(lap);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(eigs[k], sums[k], 1e-12);
}

TEST(Laplacian, NonnegativeAndSelfadjoint) {
  for (const GridSpec& g : {GridSpec{1, 7, 0.3}, GridSpec{2, 5, 0.5}, GridSpec{3, 3, 1.0}}) {
    const ComplexMatrix lap = build_laplacian(g);
    EXPECT_EQ((lap - lap.adjoint()).norm(), 0.0);
    EXPECT_GE(sorted_real_eigs(lap).front(), -1e-12);
  }
  EXPECT_THROW(build_laplacian({0, 3, 1.0}), DomainError);
  EXPECT_THROW(build_laplacian({1, 3, -1.0}), DomainError);
}

TEST(Potential, ZeroAndConstant) {
  const GridSpec g{1, 5, 1.0};
  PotentialSpec zero{PotentialKind::CustomTable, {}, 1.0, 1.0, 1.0, std::vector<Complex>(5, 0.0)};
  Potential v = build_potential(g, zero, 2.0);
  EXPECT_EQ(v.matrix.norm(), 0.0);
  EXPECT_EQ(v.lp_norm, 0.0);

  const Complex c(1.5, -2.0);
  PotentialSpec constant{PotentialKind::CustomTable, {}, 1.0, 1.0, 1.0, std::vector<Complex>(5, c)};
  for (double p : {1.0, 2.0, 3.0}) {
    v = build_potential(g, constant, p);
    EXPECT_NEAR(v.lp_norm, std::abs(c) * std::pow(5.0, 1.0 / p), 1e-13);
  }
  constant.table.pop_back();
  EXPECT_THROW(build_potential(g, constant, 2.0), DomainError);
}

TEST(Potential, GaussianGridNormApproachesContinuum) {
  // ||A exp(-|x|^2/w^2)||_p^p on R^2 = |A|^p pi w^2 / p
  const Complex amp(-3.0, 2.0);
  const PotentialSpec v{PotentialKind::GaussianComplex, amp, 1.0, 1.0, 1.0, {}};
  const double p = 2.0;
  const double exact = std::pow(std::abs(amp), p) * std::numbers::pi / p;
  const double coarse = std::pow(build_potential({2, 24, 0.5}, v, p).lp_norm, p);
  const double fine = std::pow(build_potential({2, 48, 0.25}, v, p).lp_norm, p);
  EXPECT_NEAR(coarse, exact, 1e-3 * exact);
  EXPECT_NEAR(fine, exact, 1e-3 * exact);
  EXPECT_NEAR(fine, coarse, 0.05 * coarse);
}

TEST(Potential, PavlovDecayValues) {
  const GridSpec g{1, 4, 1.0};
  const PotentialSpec v{PotentialKind::PavlovDecay, {2.0, 0.0}, 1.0, 0.5, 2.0, {}};
  const auto vals = potential_values(g, v);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double x = grid_point(g, i)[0];
    EXPECT_NEAR(std::abs(vals[i] - 2.0 * std::exp(-0.5 * x * x)), 0.0, 1e-15);
  }
}

TEST(Omega0, Examples) {
  ComplexMatrix h(1, 1);
  h(0, 0) = -2.0;
  EXPECT_DOUBLE_EQ(compute_omega0(h).omega0, 2.0);

  ComplexMatrix skew(2, 2);
  skew << Complex(1.0, 0.0), Complex(0.0, 3.0), Complex(0.0, 3.0), Complex(2.0, 0.0);
  EXPECT_EQ(compute_omega0(skew).omega0, 0.0);
}

TEST(Omega0, RayleighQuotientSweep) {
  const ModelTriple model = build_abstract_model(31, 12, 3.0);
  const double w = model.omega0;
  CounterRng rng(31, 8);
  for (int k = 0; k < 200; ++k) {
    Eigen::VectorXcd f(12);
    for (int i = 0; i < 12; ++i) f(i) = rng.unit_square();
    f.normalize();
    EXPECT_GE((f.adjoint() * model.h * f)(0, 0).real(), -w - 1e-10);
  }
  const Omega0Result r = compute_omega0(model.h);
  // omega0 is clamped at zero; the witness attains the minimum of Re<Hf, f>
  const double attained = (r.witness.adjoint() * model.h * r.witness)(0, 0).real();
  EXPECT_NEAR(std::max(0.0, -attained), w, 1e-10 * (1.0 + w));
}

TEST(AbstractModel, DeterministicAndValid) {
  const ModelTriple a = build_abstract_model(5, 9, 1.0);
  const ModelTriple b = build_abstract_model(5, 9, 1.0);
  EXPECT_TRUE(a.h == b.h);
  EXPECT_TRUE(a.m == b.m);
  EXPECT_EQ(a.a, b.a);
  EXPECT_FALSE(build_abstract_model(6, 9, 1.0).m == a.m);

  const ModelTriple zero = build_abstract_model(5, 9, 0.0);
  EXPECT_TRUE(zero.h == zero.h0);
  EXPECT_EQ(zero.omega0, 0.0);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ModelTriple m = build_abstract_model(seed, 4 + static_cast<int>(seed % 17), 1.0);
    EXPECT_NO_THROW(validate_model(m));
    EXPECT_NEAR(singular_values(m.m).front(), 1.0, 1e-12);
    EXPECT_GT(m.a * m.a, m.omega0);
  }
}
