#pragma once

// Dense complex linear algebra used as the finite-dimensional surrogate for
// every operator in the library: spectra with algebraic multiplicities,
// singular values, Schatten norms, resolvents and regularized determinants.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace nsspec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Throws DomainError unless `a` is square with finite entries.
void require_square_finite(const ComplexMatrix& a, std::string_view what);

struct Eigenvalue {
  Complex value;
  int multiplicity = 1;
};

/// Eigenvalues clustered into (value, algebraic multiplicity) pairs.
/// Multiplicities sum to the matrix dimension and distinct values are
/// separated by more than `cluster_tol`.
struct Spectrum {
  std::vector<Eigenvalue> items;
  double cluster_tol = 0.0;

  std::size_t total_multiplicity() const;
};

/// Order of a Schatten class together with the determinant regularization
/// index ceil(p) = min{n in N : n >= p}.
class SchattenOrder {
public:
  explicit SchattenOrder(double p);

  double p() const { return p_; }
  int ceil() const { return ceil_; }

private:
  double p_;
  int ceil_;
};

/// Constant in |det_ceil(p)(I - C)| <= exp(Gamma_p ||C||_p^p).
/// 1/p for p <= 1, 1/2 for p = 2, and the explicit upper bound e(2 + log p)
/// everywhere else.
double gamma_constant(double p);

/// 1e-8 * (1 + ||A||_F).
double default_cluster_tol(const ComplexMatrix& a);

/// Unclustered eigenvalues, one entry per algebraic multiplicity.
/// Hessenberg reduction followed by shifted complex QR with at most
/// 100 * dim iterations; throws NumericalError on non-convergence.
std::vector<Complex> eigenvalue_list(const ComplexMatrix& a);

/// Greedy clustering of computed eigenvalues. Clusters closer than `tol`
/// after averaging are merged until the separation invariant holds.
Spectrum cluster_eigenvalues(std::span<const Complex> values, double tol);

Spectrum eigenvalues(const ComplexMatrix& a, std::optional<double> cluster_tol = std::nullopt);

/// Nonincreasing singular values.
std::vector<double> singular_values(const ComplexMatrix& a);

/// (sum_n s_n^p)^(1/p).
double schatten_norm(const ComplexMatrix& a, double p);

/// sum_n s_n^p, i.e. the p-th power of the Schatten norm.
double schatten_norm_pow(const ComplexMatrix& a, double p);

/// Product over the given eigenvalues of (1 - l) exp(sum_{j<n} l^j / j),
/// accumulated as a sum of complex logarithms. Returns exactly zero when an
/// eigenvalue lies within `snap_tol` of 1.
Complex regularized_determinant_from_eigenvalues(std::span<const Complex> eigenvalues, int n,
                                                 double snap_tol);

/// det_n(I - C). `snap_tol` defaults to default_cluster_tol(C); pass 0 to
/// disable snapping to an exact zero.
Complex regularized_determinant(const ComplexMatrix& c, int n,
                                std::optional<double> snap_tol = std::nullopt);

struct DetBoundCheck {
  double lhs = 0.0;  ///< |det_ceil(p)(I - C)|
  double rhs = 0.0;  ///< exp(Gamma_p ||C||_p^p)
  bool pass = false;
};

DetBoundCheck det_bound_check(const ComplexMatrix& c, double p);

struct ResolventResult {
  ComplexMatrix value;  ///< (lambda I - A)^{-1}
  double residual = 0.0;  ///< ||(lambda I - A) X - I||_F
};

/// Solves (lambda I - A) X = I by partially pivoted LU. Throws DomainError
/// when lambda is within the cluster tolerance of the spectrum of A.
ResolventResult resolvent_apply(const ComplexMatrix& a, Complex lambda,
                                std::optional<double> cluster_tol = std::nullopt);

/// Repeated resolvent evaluation for a fixed matrix. The spectrum is computed
/// once and reused for the singular-shift check.
class ShiftedSolver {
public:
  explicit ShiftedSolver(ComplexMatrix a, std::optional<double> cluster_tol = std::nullopt);

  const ComplexMatrix& matrix() const { return a_; }
  const std::vector<Complex>& spectrum() const { return eigs_; }
  double cluster_tol() const { return tol_; }

  /// Distance from lambda to the computed spectrum.
  double distance_to_spectrum(Complex lambda) const;

  /// (lambda I - A)^{-1} B.
  ComplexMatrix solve(Complex lambda, const ComplexMatrix& b) const;
  ComplexMatrix inverse(Complex lambda) const;

private:
  ComplexMatrix a_;
  std::vector<Complex> eigs_;
  double tol_;
};

}  // namespace nsspec
