#pragma once

// Zero sums of holomorphic functions on the unit disk against boundary growth
// envelopes, Blaschke products with prescribed zeros, and the transfer of the
// disk-side zero sum of h back to eigenvalues of H.

#include <functional>
#include <span>
#include <vector>

#include "nsspec/functionals.hpp"
#include "nsspec/linalg.hpp"
#include "nsspec/perturbation.hpp"

namespace nsspec {

using DiskFunction = std::function<Complex(Complex)>;

struct BoundaryPoint {
  Complex xi;
  double beta = 0.0;
};

/// Growth weights (1 - |z|)^alpha prod |z - xi_j|^beta_j and the zero-sum
/// exponent shift tau.
struct BoundaryData {
  double alpha = 0.0;
  std::vector<BoundaryPoint> points;
  double tau = 0.5;
};

/// |xi_j| = 1 within 1e-12, xi_j pairwise distinct, alpha, beta_j >= 0, tau > 0.
void validate_boundary(const BoundaryData& bd);

struct DiskZero {
  Complex z;
  int multiplicity = 1;
};

struct ZeroSet {
  std::vector<DiskZero> zeros;
};

void validate_zero_set(const ZeroSet& zs);

/// Sum of mult (1 - |z|)^(alpha + 1 + tau) prod |z - xi_j|^((beta_j - 1 + tau)_+).
double zero_sum(const ZeroSet& zs, const BoundaryData& bd);

/// Polar lattice r_k = 1 - (1e-4)^(k/(radii-1)), theta_j = 2 pi j / angles.
std::vector<Complex> polar_lattice(int radii = 64, int angles = 256);

/// sup over the lattice of log|h(z)| (1 - |z|)^alpha prod |z - xi_j|^beta_j,
/// floored at 0. Throws DomainError unless |h(0) - 1| <= 1e-8. Samples with
/// |h| < 1e-300 or a non-finite value are skipped.
double growth_k(const DiskFunction& h, const BoundaryData& bd,
                std::span<const Complex> lattice);

double growth_k(const DiskFunction& h, const BoundaryData& bd);

struct BlaschkeProduct {
  ZeroSet zeros;
  bool normalized = true;  ///< false when a zero sits at the origin
  Complex value_at_zero{1.0, 0.0};

  Complex operator()(Complex z) const;
};

/// prod ((z_k - z)/(1 - conj(z_k) z))^m_k / z_k^m_k, so that h(0) = 1.
BlaschkeProduct blaschke_oracle(ZeroSet zeros);

/// ((rho_+) - 1 + tau)_+ == (rho - 1 + tau)_+.
bool exponent_identity_holds(double rho, double tau);

struct TransferTerm {
  Complex lambda;
  int multiplicity = 1;
  double disk_term = 0.0;    ///< (1-|z|)^(2 eta1) |z+1|^(2 eta2) |z-1|^(2 eta0), z = phi_a^{-1}(l)
  double lambda_term = 0.0;  ///< explicit lower bound of disk_term
};

struct TransferReport {
  double disk_sum = 0.0;
  double lambda_sum = 0.0;
  double constant = 0.0;  ///< 2^(eta0 + eta2 - 2 eta1) a^(2 eta0 + 2 eta1)
  double k_scale = 0.0;   ///< K1 a^(alpha + rho)
  std::vector<TransferTerm> terms;
  std::vector<Complex> excluded;
  bool pass = false;
};

/// Lower bound of the disk-side sum over z = phi_a^{-1}(l_k) by
///   constant * sum dist^(2 eta1) / (|l|^(eta1 - eta2) (|l| + a^2)^(eta0 + 2 eta1 + eta2)),
/// assembled from the distortion bounds of phi_a^{-1}. Checked termwise and
/// for the sums, relative slack 1e-10.
TransferReport sc3_to_sc4_transfer(const ModelTriple& model, const ExponentProfile& prof,
                                   const GrowthEnvelope& env);

}  // namespace nsspec
