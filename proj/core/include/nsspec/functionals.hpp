#pragma once

// Exponent bookkeeping and the eigenvalue-sum functionals bounded by the
// Lieb-Thirring type inequalities. All sums run over finite eigenvalue lists
// weighted by algebraic multiplicity; eigenvalues on [0, inf) are skipped.

#include <span>
#include <vector>

#include "nsspec/linalg.hpp"

namespace nsspec {

/// (p, alpha, delta, nu, tau) and the derived exponents
///   rho  = delta + 2(p - alpha) - nu
///   eta0 = (rho - 1 + tau)_+ / 2
///   eta1 = (alpha + 1 + tau) / 2
///   eta2 = (nu - 1 + tau)_+ / 2
///   eta3 = (alpha + nu - delta) / 2 - tau
struct ExponentProfile {
  double p = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
  double nu = 0.0;
  double tau = 0.0;
  double rho = 0.0;
  double eta0 = 0.0;
  double eta1 = 0.0;
  double eta2 = 0.0;
  double eta3 = 0.0;

  /// Exponent of (1 + omega0) in the constant of the general bound:
  /// eta1 + eta2 + (alpha + rho)/2.
  double omega_exponent() const { return eta1 + eta2 + 0.5 * (alpha + rho); }
};

inline double positive_part(double x) { return x > 0.0 ? x : 0.0; }

ExponentProfile make_profile(double p, double alpha, double delta, double nu, double tau);

/// Profile of -Laplace + V on R^d: nu = p - d/2, delta = d/2 - 1, alpha = p - 1.
/// Requires d >= 2, p >= 2 and p > d/2.
ExponentProfile schrodinger_profile(int d, double p, double tau);

using EigenvalueList = std::vector<Eigenvalue>;

/// Sum of dist^(2 eta1) / (|l|^(eta1 - eta2) (|l| + 1)^(eta1 + eta2 - eta3)).
double theorem1_lhs(std::span<const Eigenvalue> ev, const ExponentProfile& prof);

/// Sum over |l| >= eps of dist^(2 eta1) / |l|^(2 eta1 - eta3).
double corollary1_lhs(std::span<const Eigenvalue> ev, const ExponentProfile& prof, double eps);

/// The Schrodinger-form sum: for p - d/2 >= 1 - tau
///   dist^(p+tau) / (|l|^(d/4 + 1/2) (|l| + 1)^(d/4 - 1/2 + 2 tau)),
/// otherwise
///   dist^(p+tau) / (|l|^((p+tau)/2) (|l| + 1)^((d - p + 3 tau)/2)).
double schrodinger_lhs(std::span<const Eigenvalue> ev, int d, double p, double tau);

/// Sum over |l| >= eps of dist^(p+tau) / |l|^(d/2 + 2 tau).
double corollary2_lhs(std::span<const Eigenvalue> ev, int d, double p, double tau, double eps);

/// Sum over |Im l| >= chi Re l of |l|^kappa.
double frank_lhs(std::span<const Eigenvalue> ev, double kappa, double chi);

/// The complement of frank_lhs: sum over |Im l| < chi Re l of |l|^kappa.
double frank_complement(std::span<const Eigenvalue> ev, double kappa, double chi);

/// Sum of dist^(p+tau) / |l|^(d/2 + tau). Requires p - d/2 >= 1.
double frank_cor_lhs(std::span<const Eigenvalue> ev, int d, double p, double tau);

/// Sector-weighted moment sum over Re l > 0 of |l|^kappa min(1, |Im l|/Re l)^q / q,
/// the closed form of int_0^1 chi^(q-1) frank_lhs(chi) restricted to Re l > 0.
double frank_chi_moment(std::span<const Eigenvalue> ev, double kappa, double q);

struct TailSums {
  double left = 0.0;     ///< Re l <= 0:       sum |l|^(eta1 + eta2)
  double right = 0.0;    ///< Re l > 0:        sum |Im l|^(2 eta1) / |l|^(eta1 - eta2)
  double far = 0.0;      ///< dist >= sep:     sum 1 / |l|^(2 eta1 - eta3)
};

TailSums sequence_tail_sums(std::span<const Eigenvalue> ev, const ExponentProfile& prof,
                            double separation = 0.1);

/// lhs / (K (1 + omega0)^(eta1 + eta2 + (alpha + rho)/2)): the empirical constant.
double ratio_diagnostic(double lhs, double k, double omega0, const ExponentProfile& prof);

}  // namespace nsspec
