#include "nsspec/models.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "nsspec/error.hpp"
#include "nsspec/rng.hpp"

namespace nsspec {

std::size_t GridSpec::size() const {
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) total *= static_cast<std::size_t>(n);
  return total;
}

void validate_grid(const GridSpec& g) {
  if (g.d < 1 || g.d > 3) throw DomainError("grid: d must be 1, 2 or 3");
  if (g.n < 2) throw DomainError("grid: need n >= 2 points per axis");
  if (!(g.h > 0.0) || !std::isfinite(g.h)) throw DomainError("grid: spacing must be positive");
  if (std::pow(static_cast<double>(g.n), g.d) > static_cast<double>(kMaxModelDim)) {
    std::ostringstream os;
    os << "grid: dimension n^d = " << g.size() << " exceeds " << kMaxModelDim;
    throw DomainError(os.str());
  }
}

std::string to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::GaussianComplex:
      return "gaussian_complex";
    case PotentialKind::PavlovDecay:
      return "pavlov_decay";
    case PotentialKind::CustomTable:
      return "custom_table";
  }
  return "unknown";
}

PotentialKind potential_kind_from_string(const std::string& name) {
  if (name == "gaussian_complex") return PotentialKind::GaussianComplex;
  if (name == "pavlov_decay") return PotentialKind::PavlovDecay;
  if (name == "custom_table") return PotentialKind::CustomTable;
  throw DomainError("unknown potential kind '" + name + "'");
}

std::vector<double> grid_point(const GridSpec& g, std::size_t index) {
  std::vector<double> x(static_cast<std::size_t>(g.d));
  const double lo = -g.half_width();
  for (int k = g.d - 1; k >= 0; --k) {
    const auto i = index % static_cast<std::size_t>(g.n);
    index /= static_cast<std::size_t>(g.n);
    x[static_cast<std::size_t>(k)] = lo + (static_cast<double>(i) + 0.5) * g.h;
  }
  return x;
}

std::vector<Complex> potential_values(const GridSpec& g, const PotentialSpec& v) {
  validate_grid(g);
  const std::size_t count = g.size();
  std::vector<Complex> out(count);

  if (v.kind == PotentialKind::CustomTable) {
    if (v.table.size() != count) {
      std::ostringstream os;
      os << "custom_table potential has " << v.table.size() << " values, grid has " << count;
      throw DomainError(os.str());
    }
    out = v.table;
  } else {
    if (v.kind == PotentialKind::GaussianComplex && !(v.width > 0.0))
      throw DomainError("gaussian_complex potential needs width > 0");
    if (v.kind == PotentialKind::PavlovDecay && (!(v.decay > 0.0) || !(v.exponent > 0.0)))
      throw DomainError("pavlov_decay potential needs decay > 0 and exponent > 0");
    for (std::size_t i = 0; i < count; ++i) {
      double r2 = 0.0;
      for (double c : grid_point(g, i)) r2 += c * c;
      if (v.kind == PotentialKind::GaussianComplex)
        out[i] = v.amplitude * std::exp(-r2 / (v.width * v.width));
      else
        out[i] = v.amplitude * std::exp(-v.decay * std::pow(std::sqrt(r2), v.exponent));
    }
  }
  for (const Complex& c : out)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw DomainError("potential has a non-finite value");
  return out;
}

ComplexMatrix build_laplacian(const GridSpec& g) {
  validate_grid(g);
  const auto n = static_cast<Eigen::Index>(g.size());
  const double inv_h2 = 1.0 / (g.h * g.h);
  ComplexMatrix lap = ComplexMatrix::Zero(n, n);

  Eigen::Index stride = 1;
  for (int axis = 0; axis < g.d; ++axis) {
    for (Eigen::Index i = 0; i < n; ++i) {
      lap(i, i) += 2.0 * inv_h2;
      const Eigen::Index along = (i / stride) % g.n;
      if (along + 1 < g.n) {
        lap(i, i + stride) -= inv_h2;
        lap(i + stride, i) -= inv_h2;
      }
    }
    stride *= g.n;
  }
  return lap;
}

double grid_lp_norm(const GridSpec& g, const std::vector<Complex>& values, double p) {
  if (!(p > 0.0)) throw DomainError("grid_lp_norm: p must be positive");
  const double cell = std::pow(g.h, g.d);
  double sum = 0.0;
  for (const Complex& v : values) sum += std::pow(std::abs(v), p) * cell;
  return std::pow(sum, 1.0 / p);
}

Potential build_potential(const GridSpec& g, const PotentialSpec& v, double p) {
  const auto values = potential_values(g, v);
  Potential out;
  const auto n = static_cast<Eigen::Index>(values.size());
  out.matrix = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out.matrix(i, i) = values[static_cast<std::size_t>(i)];
  out.lp_norm = grid_lp_norm(g, values, p);
  return out;
}

Omega0Result compute_omega0(const ComplexMatrix& h) {
  require_square_finite(h, "compute_omega0");
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw NumericalError("compute_omega0: Hermitian eigensolver failed");
  Omega0Result out;
  out.omega0 = std::max(0.0, -solver.eigenvalues()(0));
  out.witness = solver.eigenvectors().col(0);
  return out;
}

ModelTriple make_model(ComplexMatrix h0, ComplexMatrix m, double p, std::optional<double> a) {
  require_square_finite(h0, "make_model H0");
  require_square_finite(m, "make_model M");
  if (h0.rows() != m.rows()) throw DomainError("make_model: H0 and M differ in dimension");
  ModelTriple model{std::move(h0), std::move(m), {}, 1.0, 0.0, SchattenOrder(p)};
  model.h = model.h0 + model.m;
  model.omega0 = compute_omega0(model.h).omega0;
  model.a = a.value_or(std::sqrt(1.5 * (model.omega0 + 1.0)));
  validate_model(model);
  return model;
}

ModelTriple build_abstract_model(std::uint64_t seed, int dim, double m_norm, double p) {
  if (dim < 1) throw DomainError("build_abstract_model: dim must be >= 1");
  if (static_cast<std::size_t>(dim) > kMaxModelDim)
    throw DomainError("build_abstract_model: dim too large");
  if (!(m_norm >= 0.0)) throw DomainError("build_abstract_model: norm must be nonnegative");

  CounterRng rng(seed);
  ComplexMatrix h0 = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) h0(i, i) = rng.uniform(0.0, 10.0);

  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = rng.unit_square();
  if (m_norm == 0.0) {
    m.setZero();
  } else {
    const double top = singular_values(m).front();
    m *= m_norm / top;
  }
  return make_model(std::move(h0), std::move(m), p);
}

}  // namespace nsspec
