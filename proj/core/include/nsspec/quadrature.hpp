#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace nsspec {

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;
  std::size_t evaluations = 0;

  QuadratureResult& operator+=(const QuadratureResult& other) {
    value += other.value;
    est_error += other.est_error;
    evaluations += other.evaluations;
    return *this;
  }
};

using Integrand = std::function<double(double)>;

/// Adaptive 15/31-point Gauss-Kronrod on [a, b]. Throws NumericalError when
/// the error estimate exceeds max(rel_tol max(|value|, L1), abs_tol).
QuadratureResult integrate(const Integrand& f, double a, double b, double rel_tol = 1e-12,
                           double abs_tol = 1e-300);

/// Gauss-Kronrod on consecutive panels [breaks[i], breaks[i+1]].
QuadratureResult integrate_panels(const Integrand& f, std::span<const double> breaks,
                                  double rel_tol = 1e-12);

/// Double-exponential (tanh-sinh) rule on [a, b]; tolerates integrable
/// endpoint singularities. Its estimate is the difference of the last two
/// levels, accepted up to 100 rel_tol max(|value|, L1).
QuadratureResult integrate_endpoint_singular(const Integrand& f, double a, double b,
                                             double rel_tol = 1e-12);

/// int_a^inf f: Gauss-Kronrod on [a, split] plus the tail through r = 1/u,
/// int_0^(1/split) f(1/u) / u^2 du.
QuadratureResult integrate_to_infinity(const Integrand& f, double a, double split,
                                       double rel_tol = 1e-12);

}  // namespace nsspec
