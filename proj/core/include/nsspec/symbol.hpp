#pragma once

// L^p norms of the free resolvent symbol (lambda - |x|^2)^{-1} on R^d and the
// scalar integral identities and bounds used to control them.

#include "nsspec/functionals.hpp"
#include "nsspec/linalg.hpp"
#include "nsspec/quadrature.hpp"

namespace nsspec {

/// Surface area of the unit sphere in R^d: 2 pi^(d/2) / Gamma(d/2).
double sphere_area(int d);

struct SymbolParams {
  Complex lambda;
  double p = 2.0;
  int d = 3;

  double lambda0() const { return lambda.real(); }
  double lambda1() const { return lambda.imag(); }
};

/// Requires d >= 2, p >= 2, p > d/2 and lambda off [0, inf).
void validate_symbol_params(const SymbolParams& sp);

/// ||(lambda - |.|^2)^{-1}||_p^p = |S^{d-1}| int_0^inf r^(d-1) |lambda - r^2|^(-p) dr.
/// Panels cluster around r = sqrt(Re lambda); the tail beyond
/// 10 (1 + sqrt|lambda|) is mapped to a finite interval by r = 1/u.
QuadratureResult lp_resolvent_norm(const SymbolParams& sp, double rel_tol = 1e-11);

/// |Re l|^((d-2)/2) / |Im l|^(p-1) + 1 / |Im l|^(p - d/2).
double show1_bracket(const SymbolParams& sp);

/// lp_resolvent_norm / show1_bracket, for Re lambda > 0.
double show1_ratio(const SymbolParams& sp);

/// lp_resolvent_norm * |lambda|^(p - d/2), for Re lambda <= 0.
double halfplane_ratio(const SymbolParams& sp);

/// The two s-integrals after r = sqrt(l0 - l1 s) (l = l0 + i l1, l0, l1 > 0):
///   upper = int_0^inf (l0 + l1 s)^k (1 + s^2)^(-p/2) ds
///   lower = int_0^(l0/l1) (l0 - l1 s)^k (1 + s^2)^(-p/2) ds,   k = (d - 2)/2.
struct SplitIntegrals {
  double upper = 0.0;
  double lower = 0.0;
};

SplitIntegrals split_integrals(double lambda0, double lambda1, double p, int d);

struct Es1Check {
  double lhs = 0.0;      ///< lp_resolvent_norm
  double bracket = 0.0;  ///< upper + lower
  double ratio = 0.0;    ///< lhs / (l1^(1-p) bracket); |S^{d-1}|/2 for every lambda
};

Es1Check es1_identity_check(const SymbolParams& sp);

/// int_0^inf s^e (1 + s^2)^(-p/2) ds = B((e + 1)/2, (p - e - 1)/2) / 2.
double power_moment(double e, double p);

struct KjLlCheck {
  double upper = 0.0;
  double upper_bound = 0.0;  ///< 2^k (J0 + J1) (l0^k + l1^k)
  double lower = 0.0;
  double lower_bound = 0.0;  ///< l0^k J0
  bool pass = false;
};

/// J0 = power_moment(0, p), J1 = power_moment(k, p). Throws DomainError
/// unless p > d/2.
KjLlCheck kj_ll_bound_check(double lambda0, double lambda1, double p, int d);

struct QuotientCheck {
  double q1 = 0.0;
  double q2 = 0.0;
  double bound = 0.0;  ///< 2^(-(p/2 - d/4))
  bool pass = false;
};

/// The two quotients controlling ||M_V [mu^2 - H0]^{-1}|| in the region
/// 0 < Im mu < |Re mu|. Only q1 is checked against the explicit bound.
QuotientCheck po_quotient_check(Complex mu, double p, int d);

struct IntegralBound {
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// int_(omega0+1)^inf b^(p-1-tau) (b - omega0)^(-p) db against
/// tau^{-1} (1 + omega0)^(p - tau). Evaluated as
/// tau^{-1} int_0^1 (1 + omega0 s^(1/tau))^(p-1-tau) ds (s = (b - omega0)^(-tau)).
IntegralBound pr2_integral_check(double p, double tau, double omega0);

/// The same integral evaluated directly on the half-line.
double pr2_direct(double p, double tau, double omega0);

struct ChiIntegral {
  double quadrature = 0.0;
  double closed_form = 0.0;
  bool pass = false;
};

/// int_0^min(t,1) chi^(q-1) d chi against min(1, t)^q / q, relative 1e-10.
ChiIntegral chi_integral_check(double t, double q);

/// int_(omega0+1)^inf b^phi1 / ((b + |l|)^phi2 (b + 1)^(delta/2)) db scaled by
/// ((omega0 + 1)(|l| + 1))^(eta1 + eta2 - eta3). Bounded below by a
/// profile constant; reported only.
double pr3_ratio(const ExponentProfile& prof, double abs_lambda, double omega0);

}  // namespace nsspec
