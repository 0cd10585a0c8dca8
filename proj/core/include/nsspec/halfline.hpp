#pragma once

// Geometry of the slit plane C \ [0, inf): distance to the half-line, the
// square root branch with positive imaginary part, and the conformal map of
// the unit disk onto the slit plane together with its distortion bounds.

#include <array>

#include "nsspec/linalg.hpp"

namespace nsspec {

/// Points within this distance of [0, inf) are treated as lying on the slit.
inline constexpr double kSlitTolerance = 1e-14;

/// dist(lambda, [0, inf)): |Im lambda| when Re lambda > 0, |lambda| otherwise.
double dist_halfline(Complex lambda);

/// True when lambda is a valid slit-plane point.
bool off_slit(Complex lambda, double tol = kSlitTolerance);

/// The square root mu of lambda with Im mu > 0. Throws DomainError on the slit.
Complex sqrt_upper(Complex lambda);

/// phi_a(z) = -a^2 ((z + 1)/(z - 1))^2, mapping |z| < 1 onto C \ [0, inf)
/// with phi_a(0) = -a^2.
Complex phi(double a, Complex z);

/// Inverse of phi. With mu = sqrt_upper(lambda) the relation
/// mu = i a (1 + z)/(1 - z) solves to z = (mu - i a)/(mu + i a).
Complex phi_inv(double a, Complex lambda);

/// One double inequality lower <= value <= upper.
struct Bracket {
  double lower = 0.0;
  double value = 0.0;
  double upper = 0.0;
  bool pass = false;
};

/// |mu||Im mu| <= dist(mu^2, [0, inf)) <= 2|mu||Im mu|, relative slack 1e-12.
Bracket lemma_sq_check(Complex mu);

/// Distortion bounds of phi_a^{-1} at lambda:
///   [0] 1 - |z|   between (a/2) d / (|l|^(1/2)(|l| + a^2)) and 4a d / (...)
///   [1] |z - 1|   between sqrt(2) a / (|l| + a^2)^(1/2) and 2a / (...)
///   [2] |z + 1|   between sqrt(2)|l|^(1/2) / (|l| + a^2)^(1/2) and 2|l|^(1/2) / (...)
/// with z = phi_a^{-1}(l) and d = dist(l, [0, inf)). Relative slack `slack`.
std::array<Bracket, 3> lemma_ese2_check(double a, Complex lambda, double slack = 1e-10);

}  // namespace nsspec
