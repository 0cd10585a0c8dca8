#include "nsspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "nsspec/error.hpp"

namespace nsspec {

void require_square_finite(const ComplexMatrix& a, std::string_view what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a nonempty square matrix, got " << a.rows() << "x" << a.cols();
    throw DomainError(os.str());
  }
  if (!a.allFinite()) throw DomainError(std::string(what) + ": matrix has non-finite entries");
}

std::size_t Spectrum::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& e : items) total += static_cast<std::size_t>(e.multiplicity);
  return total;
}

SchattenOrder::SchattenOrder(double p) : p_(p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("Schatten order must be a positive real");
  ceil_ = std::max(1, static_cast<int>(std::ceil(p)));
}

double gamma_constant(double p) {
  if (!(p > 0.0)) throw DomainError("gamma_constant: p must be positive");
  if (p <= 1.0) return 1.0 / p;
  if (p == 2.0) return 0.5;
  return std::numbers::e * (2.0 + std::log(p));
}

double default_cluster_tol(const ComplexMatrix& a) { return 1e-8 * (1.0 + a.norm()); }

std::vector<Complex> eigenvalue_list(const ComplexMatrix& a) {
  require_square_finite(a, "eigenvalues");
  const Eigen::Index n = a.rows();
  if (n == 1) return {a(0, 0)};

  Eigen::ComplexEigenSolver<ComplexMatrix> solver;
  solver.setMaxIterations(100 * n);
  solver.compute(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    // Residual diagnostic: how far the partially reduced Schur form is from
    // triangular.
    Eigen::ComplexSchur<ComplexMatrix> schur(n);
    schur.setMaxIterations(100 * n);
    schur.compute(a, /*computeU=*/false);
    const ComplexMatrix& t = schur.matrixT();
    double sub = 0.0;
    for (Eigen::Index i = 1; i < n; ++i) sub = std::max(sub, std::abs(t(i, i - 1)));
    std::ostringstream os;
    os << "eigenvalues: QR iteration did not converge within " << 100 * n
       << " iterations (dim " << n << ", max subdiagonal " << sub << ", ||A||_F " << a.norm()
       << ")";
    throw NumericalError(os.str());
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

Spectrum cluster_eigenvalues(std::span<const Complex> values, double tol) {
  if (!(tol > 0.0)) throw DomainError("cluster tolerance must be positive");

  struct Cluster {
    Complex sum;
    int count;
    Complex mean() const { return sum / static_cast<double>(count); }
  };
  std::vector<Cluster> clusters;
  for (const Complex& v : values) {
    auto it = std::find_if(clusters.begin(), clusters.end(),
                           [&](const Cluster& c) { return std::abs(c.mean() - v) <= tol; });
    if (it == clusters.end())
      clusters.push_back({v, 1});
    else {
      it->sum += v;
      ++it->count;
    }
  }

  // Averaging can pull two cluster centres within tol of each other.
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < clusters.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < clusters.size() && !merged; ++j)
        if (std::abs(clusters[i].mean() - clusters[j].mean()) <= tol) {
          clusters[i].sum += clusters[j].sum;
          clusters[i].count += clusters[j].count;
          clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
  }

  Spectrum s;
  s.cluster_tol = tol;
  s.items.reserve(clusters.size());
  for (const auto& c : clusters) s.items.push_back({c.mean(), c.count});
  return s;
}

Spectrum eigenvalues(const ComplexMatrix& a, std::optional<double> cluster_tol) {
  const auto list = eigenvalue_list(a);
  return cluster_eigenvalues(list, cluster_tol.value_or(default_cluster_tol(a)));
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  if (!a.allFinite()) throw DomainError("singular_values: matrix has non-finite entries");
  if (a.size() == 0) return {};
  Eigen::BDCSVD<ComplexMatrix> svd(a);
  const auto& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double schatten_norm_pow(const ComplexMatrix& a, double p) {
  if (!(p > 0.0)) throw DomainError("schatten_norm: p must be positive");
  double sum = 0.0;
  for (double s : singular_values(a)) sum += std::pow(s, p);
  return sum;
}

double schatten_norm(const ComplexMatrix& a, double p) {
  if (!(p > 0.0)) throw DomainError("schatten_norm: p must be positive");
  const auto s = singular_values(a);
  if (s.empty() || s.front() == 0.0) return 0.0;
  // Scale by the largest singular value so large p does not overflow.
  const double top = s.front();
  double sum = 0.0;
  for (double v : s) sum += std::pow(v / top, p);
  return top * std::pow(sum, 1.0 / p);
}

Complex regularized_determinant_from_eigenvalues(std::span<const Complex> eigenvalues, int n,
                                                 double snap_tol) {
  if (n < 1) throw DomainError("regularized_determinant: n must be >= 1");
  Complex log_det{0.0, 0.0};
  for (const Complex& l : eigenvalues) {
    const Complex one_minus = 1.0 - l;
    if (std::abs(one_minus) <= snap_tol || one_minus == 0.0) return {0.0, 0.0};
    Complex term = std::log(one_minus);
    Complex power = 1.0;
    for (int j = 1; j < n; ++j) {
      power *= l;
      term += power / static_cast<double>(j);
    }
    log_det += term;
  }
  if (log_det == 0.0) return {1.0, 0.0};
  return std::exp(log_det);
}

Complex regularized_determinant(const ComplexMatrix& c, int n, std::optional<double> snap_tol) {
  require_square_finite(c, "regularized_determinant");
  if (n < 1) throw DomainError("regularized_determinant: n must be >= 1");
  if (c.isZero(0.0)) return {1.0, 0.0};
  const auto eigs = eigenvalue_list(c);
  return regularized_determinant_from_eigenvalues(eigs, n,
                                                  snap_tol.value_or(default_cluster_tol(c)));
}

DetBoundCheck det_bound_check(const ComplexMatrix& c, double p) {
  const SchattenOrder order(p);
  DetBoundCheck out;
  out.lhs = std::abs(regularized_determinant(c, order.ceil()));
  out.rhs = std::exp(gamma_constant(p) * schatten_norm_pow(c, p));
  out.pass = out.lhs <= out.rhs * (1.0 + 1e-10);
  return out;
}

ShiftedSolver::ShiftedSolver(ComplexMatrix a, std::optional<double> cluster_tol)
    : a_(std::move(a)) {
  require_square_finite(a_, "resolvent");
  eigs_ = eigenvalue_list(a_);
  tol_ = cluster_tol.value_or(default_cluster_tol(a_));
}

double ShiftedSolver::distance_to_spectrum(Complex lambda) const {
  double d = std::numeric_limits<double>::infinity();
  for (const Complex& e : eigs_) d = std::min(d, std::abs(lambda - e));
  return d;
}

ComplexMatrix ShiftedSolver::solve(Complex lambda, const ComplexMatrix& b) const {
  if (distance_to_spectrum(lambda) <= tol_) {
    std::ostringstream os;
    os << "resolvent: shift " << lambda << " lies within " << tol_ << " of the spectrum";
    throw DomainError(os.str());
  }
  ComplexMatrix shifted = -a_;
  shifted.diagonal().array() += lambda;
  return Eigen::PartialPivLU<ComplexMatrix>(shifted).solve(b);
}

ComplexMatrix ShiftedSolver::inverse(Complex lambda) const {
  return solve(lambda, ComplexMatrix::Identity(a_.rows(), a_.cols()));
}

ResolventResult resolvent_apply(const ComplexMatrix& a, Complex lambda,
                                std::optional<double> cluster_tol) {
  const ShiftedSolver solver(a, cluster_tol);
  ResolventResult out;
  out.value = solver.inverse(lambda);
  ComplexMatrix shifted = -a;
  shifted.diagonal().array() += lambda;
  out.residual =
      (shifted * out.value - ComplexMatrix::Identity(a.rows(), a.cols())).norm();
  return out;
}

}  // namespace nsspec
