#include "nsspec/halfline.hpp"

#include <cmath>
#include <sstream>

#include "nsspec/error.hpp"

namespace nsspec {

namespace {

void require_slit_point(Complex lambda, const char* what) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) || !off_slit(lambda)) {
    std::ostringstream os;
    os << what << ": " << lambda << " is not in C \\ [0, inf)";
    throw DomainError(os.str());
  }
}

void require_map_parameter(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("map parameter a must be positive");
}

Bracket bracket(double lower, double value, double upper, double slack) {
  const bool ok = lower <= value * (1.0 + slack) && value <= upper * (1.0 + slack);
  return {lower, value, upper, ok};
}

}  // namespace

double dist_halfline(Complex lambda) {
  return lambda.real() > 0.0 ? std::abs(lambda.imag()) : std::abs(lambda);
}

bool off_slit(Complex lambda, double tol) { return dist_halfline(lambda) > tol; }

Complex sqrt_upper(Complex lambda) {
  require_slit_point(lambda, "sqrt_upper");
  if (lambda.imag() == 0.0) return {0.0, std::sqrt(-lambda.real())};
  Complex mu = std::sqrt(lambda);
  if (mu.imag() <= 0.0) mu = -mu;
  return mu;
}

Complex phi(double a, Complex z) {
  require_map_parameter(a);
  if (!(std::abs(z) < 1.0)) throw DomainError("phi: |z| must be < 1");
  const Complex w = (z + 1.0) / (z - 1.0);
  return -a * a * w * w;
}

Complex phi_inv(double a, Complex lambda) {
  require_map_parameter(a);
  const Complex mu = sqrt_upper(lambda);
  const Complex ia{0.0, a};
  return (mu - ia) / (mu + ia);
}

Bracket lemma_sq_check(Complex mu) {
  if (mu == 0.0) throw DomainError("lemma_sq_check: mu must be nonzero");
  const double m = std::abs(mu);
  const double im = std::abs(mu.imag());
  return bracket(m * im, dist_halfline(mu * mu), 2.0 * m * im, 1e-12);
}

std::array<Bracket, 3> lemma_ese2_check(double a, Complex lambda, double slack) {
  require_map_parameter(a);
  const Complex z = phi_inv(a, lambda);
  // 1 - |z| = (1 - |z|^2)/(1 + |z|) and 1 - |z|^2 = 4a Im(mu)/|mu + ia|^2; this
  // keeps full relative accuracy when lambda approaches the slit.
  const Complex mu = sqrt_upper(lambda);
  const double one_minus_abs =
      4.0 * a * mu.imag() / (std::norm(mu + Complex{0.0, a}) * (1.0 + std::abs(z)));
  const double mod = std::abs(lambda);
  const double root = std::sqrt(mod);
  const double denom = mod + a * a;
  const double d = dist_halfline(lambda);

  const double scale0 = d / (root * denom);
  const double scale12 = 1.0 / std::sqrt(denom);
  return {
      bracket(0.5 * a * scale0, one_minus_abs, 4.0 * a * scale0, slack),
      bracket(std::sqrt(2.0) * a * scale12, std::abs(z - 1.0), 2.0 * a * scale12, slack),
      bracket(std::sqrt(2.0) * root * scale12, std::abs(z + 1.0), 2.0 * root * scale12, slack),
  };
}

}  // namespace nsspec
