#pragma once

// The holomorphic function whose zeros are the discrete eigenvalues of
// H = H0 + M:
//
//   F(l) = (l + a^2) [a^2 + H]^{-1} M [l - H0]^{-1},   f(l) = det_ceil(p)(I - F(l)),
//   h(z) = f(phi_a(z)),
//
// with the explicit growth bounds for f on the upper half-plane (in the
// square-root variable mu) and for h on the unit disk.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsspec/linalg.hpp"

namespace nsspec {

/// One experiment instance: H0 selfadjoint with nonnegative spectrum, the
/// perturbation M, H = H0 + M, the map parameter a with a^2 > omega0, the
/// numerical-range margin omega0, and the Schatten order p.
struct ModelTriple {
  ComplexMatrix h0;
  ComplexMatrix m;
  ComplexMatrix h;
  double a = 1.0;
  double omega0 = 0.0;
  SchattenOrder p{2.0};

  Eigen::Index dim() const { return h0.rows(); }
};

/// Throws DomainError listing the first violated invariant.
void validate_model(const ModelTriple& model);

enum class EnvelopeKind { K0, K1 };

/// Grid estimate of the constants in
///   ||T(mu)||_p^p <= K |mu + i c|^delta / (|Im mu|^alpha |mu|^nu),
/// T = M [mu^2 - H0]^{-1} with c = 1 (K0) or T = [a^2 + H]^{-1} M [mu^2 - H0]^{-1}
/// with c = a (K1).
struct GrowthEnvelope {
  double k = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
  double nu = 0.0;
  EnvelopeKind kind = EnvelopeKind::K1;
};

struct ZeroCorrespondence {
  double max_abs_f_at_eigs = 0.0;
  double min_abs_f_on_probes = 0.0;
  std::vector<Eigenvalue> discrete;  ///< eigenvalues of H used in the check
  std::vector<Complex> excluded;     ///< eigenvalues within 1e-10 of [0, inf)
  bool pass = false;
};

struct WorstSlack {
  double worst = 0.0;  ///< max over the grid of lhs - rhs (<= slack on success)
  std::size_t points = 0;
  bool pass = false;
};

/// Evaluation context for one model. Caches the fixed resolvents
/// [a^2 + H]^{-1}, [a^2 + H0]^{-1} and the spectrum of H0.
class PerturbationDeterminant {
public:
  explicit PerturbationDeterminant(ModelTriple model);

  const ModelTriple& model() const { return model_; }
  int order() const { return model_.p.ceil(); }

  ComplexMatrix big_f(Complex lambda) const;

  /// [(l + a^2)^{-1} - R0]^{-1} (R - R0) with R = [a^2 + H]^{-1}, R0 = [a^2 + H0]^{-1}.
  /// Undefined at l = -a^2.
  ComplexMatrix big_f_alternative(Complex lambda) const;

  /// f(lambda). `snap_tol` is forwarded to the determinant; the default
  /// snaps to zero within the determinant's cluster tolerance.
  Complex little_f(Complex lambda, std::optional<double> snap_tol = std::nullopt) const;
  Complex little_f_alternative(Complex lambda) const;

  Complex little_h(Complex z) const;

  /// ||[a^2 + H0]^{-1} - [a^2 + H]^{-1} - [a^2 + H]^{-1} M [a^2 + H0]^{-1}||_F.
  double resolvent_identity_residual() const;

  /// Entrywise max difference between [I - (l + a^2) R][I - (l + a^2) R0]^{-1}
  /// and I - F(l).
  double product_form_residual(Complex lambda) const;

  /// T(mu) of the growth envelope.
  ComplexMatrix envelope_operator(Complex mu, EnvelopeKind kind) const;

  const ComplexMatrix& inv_a2_plus_h() const { return r_; }
  const ComplexMatrix& inv_a2_plus_h0() const { return r0_; }

private:
  void require_domain(Complex lambda) const;

  ModelTriple model_;
  ShiftedSolver h0_solver_;
  ComplexMatrix r_;
  ComplexMatrix r0_;
  ComplexMatrix rm_;  // [a^2 + H]^{-1} M
};

/// Eigenvalues of H at distance > 1e-10 from [0, inf), clustered.
std::vector<Eigenvalue> discrete_eigenvalues(const ComplexMatrix& h,
                                             std::vector<Complex>* excluded = nullptr);

ZeroCorrespondence zero_correspondence(const PerturbationDeterminant& pd,
                                       double context_scale = 0.0);

/// max over the discrete eigenvalues of 1e-8 |f'(l_k)| (1 + |l_k|): with it
/// the zero_correspondence threshold admits the change of f under an
/// eigenvalue error of about 1e-15 relative.
double eigenvalue_context_scale(const PerturbationDeterminant& pd);

GrowthEnvelope estimate_k(const PerturbationDeterminant& pd, double alpha, double delta,
                          double nu, std::span<const Complex> mu_grid, EnvelopeKind kind);

/// log|f(mu^2)| <= Gamma_p K1 |mu - ia|^p |mu + ia|^(delta + p) / (|Im mu|^alpha |mu|^nu)
/// at every grid point, absolute slack 1e-9.
WorstSlack lemma_bound_check(const PerturbationDeterminant& pd, const GrowthEnvelope& env,
                             std::span<const Complex> mu_grid);

/// log|h(z)| <= Gamma_p 2^(delta + 2p) K1 a^(alpha + rho) |z|^p
///              / ((1 - |z|)^alpha |z + 1|^nu |z - 1|^rho),   rho = delta + 2(p - alpha) - nu,
/// at every grid point, absolute slack 1e-9.
WorstSlack lemma_bh_check(const PerturbationDeterminant& pd, const GrowthEnvelope& env,
                          std::span<const Complex> disk_grid);

/// mu = i a (1 + z)/(1 - z) for each disk point; the mu-grid on which an
/// envelope must be estimated for lemma_bh_check.
std::vector<Complex> disk_to_mu_grid(double a, std::span<const Complex> disk_grid);

struct MultiplicityProbe {
  double abs_f = 0.0;
  double abs_df = 0.0;
  double abs_d2f = 0.0;
};

/// |f|, |f'| and |f''| at lambda0 by central differences with step
/// 1e-5 (1 + |lambda0|).
MultiplicityProbe multiplicity_probe(const PerturbationDeterminant& pd, Complex lambda0);

}  // namespace nsspec
