#include "nsspec/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "nsspec/error.hpp"
#include "nsspec/halfline.hpp"

namespace nsspec {

double sphere_area(int d) {
  if (d < 1) throw DomainError("sphere_area: d must be positive");
  const double half = 0.5 * d;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

void validate_symbol_params(const SymbolParams& sp) {
  std::ostringstream os;
  if (sp.d < 2)
    os << "symbol: d must be >= 2";
  else if (!(sp.p >= 2.0))
    os << "symbol: p must be >= 2";
  else if (!(sp.p > 0.5 * sp.d))
    os << "symbol: p = " << sp.p << " is not above d/2 = " << 0.5 * sp.d;
  else if (!off_slit(sp.lambda))
    os << "symbol: lambda lies on [0, inf)";
  else
    return;
  throw DomainError(os.str());
}

QuadratureResult lp_resolvent_norm(const SymbolParams& sp, double rel_tol) {
  validate_symbol_params(sp);
  const Complex lambda = sp.lambda;
  const double p = sp.p;
  const int d = sp.d;

  auto integrand = [&](double r) {
    return std::pow(r, d - 1) * std::pow(std::abs(lambda - r * r), -p);
  };

  const double cutoff = 10.0 * (1.0 + std::sqrt(std::abs(lambda)));
  std::vector<double> breaks{0.0, cutoff};
  if (lambda.real() > 0.0) {
    const double peak = std::sqrt(lambda.real());
    const double width = std::abs(lambda.imag()) / (2.0 * peak);
    breaks.push_back(peak);
    for (double k : {1.0, 4.0, 16.0, 64.0}) {
      breaks.push_back(peak - k * width);
      breaks.push_back(peak + k * width);
    }
  }
  std::erase_if(breaks, [&](double b) { return b < 0.0 || b > cutoff; });
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  QuadratureResult out = integrate_panels(integrand, breaks, rel_tol);

  // r = 1/u: r^(d-1) |l - r^2|^(-p) dr = u^(2p-d-1) |l u^2 - 1|^(-p) du
  auto tail = [&](double u) {
    if (u == 0.0) return 0.0;  // never sampled by the double-exponential rule
    return std::pow(u, 2.0 * p - d - 1.0) * std::pow(std::abs(lambda * (u * u) - 1.0), -p);
  };
  out += integrate_endpoint_singular(tail, 0.0, 1.0 / cutoff, rel_tol);

  const double area = sphere_area(d);
  out.value *= area;
  out.est_error *= area;
  return out;
}

double show1_bracket(const SymbolParams& sp) {
  const double im = std::abs(sp.lambda1());
  if (!(im > 0.0)) throw DomainError("show1: Im lambda must be nonzero");
  return std::pow(std::abs(sp.lambda0()), 0.5 * (sp.d - 2)) / std::pow(im, sp.p - 1.0) +
         1.0 / std::pow(im, sp.p - 0.5 * sp.d);
}

double show1_ratio(const SymbolParams& sp) {
  if (!(sp.lambda0() > 0.0)) throw DomainError("show1_ratio: needs Re lambda > 0");
  return lp_resolvent_norm(sp).value / show1_bracket(sp);
}

double halfplane_ratio(const SymbolParams& sp) {
  if (sp.lambda0() > 0.0) throw DomainError("halfplane_ratio: needs Re lambda <= 0");
  return lp_resolvent_norm(sp).value * std::pow(std::abs(sp.lambda), sp.p - 0.5 * sp.d);
}

SplitIntegrals split_integrals(double lambda0, double lambda1, double p, int d) {
  if (!(lambda0 > 0.0) || !(lambda1 > 0.0))
    throw DomainError("split_integrals: needs Re lambda > 0 and Im lambda > 0");
  if (!(p > 0.5 * d)) throw DomainError("split_integrals: needs p > d/2");
  const double k = 0.5 * (d - 2);
  auto weight = [p](double s) { return std::pow(1.0 + s * s, -0.5 * p); };

  SplitIntegrals out;
  const double split = std::max(1.0, lambda0 / lambda1);
  auto upper = [&](double s) { return std::pow(lambda0 + lambda1 * s, k) * weight(s); };
  // The branch point s = -l0/l1 can sit close to the left end; the adaptive
  // rule refines there. The tail uses s = 1/v.
  out.upper = integrate(upper, 0.0, split).value +
              integrate(
                  [&](double v) {
                    return std::pow(lambda0 * v + lambda1, k) * weight(v) * std::pow(v, p - k - 2.0);
                  },
                  0.0, 1.0 / split)
                  .value;
  const double end = lambda0 / lambda1;
  out.lower = integrate_endpoint_singular(
                  [&](double s) {
                    return std::pow(std::max(lambda0 - lambda1 * s, 0.0), k) * weight(s);
                  },
                  0.0, end)
                  .value;
  return out;
}

Es1Check es1_identity_check(const SymbolParams& sp) {
  validate_symbol_params(sp);
  const double l0 = sp.lambda0();
  const double l1 = sp.lambda1();
  if (!(l0 > 0.0) || !(l1 > 0.0))
    throw DomainError("es1_identity_check: needs Re lambda > 0 and Im lambda > 0");
  Es1Check out;
  out.lhs = lp_resolvent_norm(sp).value;
  const SplitIntegrals s = split_integrals(l0, l1, sp.p, sp.d);
  out.bracket = s.upper + s.lower;
  out.ratio = out.lhs / (std::pow(l1, 1.0 - sp.p) * out.bracket);
  return out;
}

double power_moment(double e, double p) {
  if (!(e > -1.0) || !(p - e - 1.0 > 0.0))
    throw DomainError("power_moment: integral diverges");
  return 0.5 * std::beta(0.5 * (e + 1.0), 0.5 * (p - e - 1.0));
}

KjLlCheck kj_ll_bound_check(double lambda0, double lambda1, double p, int d) {
  if (d < 2) throw DomainError("kj_ll_bound_check: d must be >= 2");
  if (!(p > 0.5 * d)) throw DomainError("kj_ll_bound_check: split integral diverges for p <= d/2");
  const double k = 0.5 * (d - 2);
  const double j0 = power_moment(0.0, p);
  const double j1 = power_moment(k, p);
  const SplitIntegrals s = split_integrals(lambda0, lambda1, p, d);

  KjLlCheck out;
  out.upper = s.upper;
  out.upper_bound = std::pow(2.0, k) * (j0 + j1) * (std::pow(lambda0, k) + std::pow(lambda1, k));
  out.lower = s.lower;
  out.lower_bound = std::pow(lambda0, k) * j0;
  constexpr double slack = 1e-10;
  out.pass = out.upper <= out.upper_bound * (1.0 + slack) &&
             out.lower <= out.lower_bound * (1.0 + slack);
  return out;
}

QuotientCheck po_quotient_check(Complex mu, double p, int d) {
  const double re = mu.real();
  const double im = mu.imag();
  if (!(im > 0.0) || !(im < std::abs(re)))
    throw DomainError("po_quotient_check: needs 0 < Im mu < |Re mu|");
  if (d < 2 || !(p > 0.5 * d)) throw DomainError("po_quotient_check: needs d >= 2, p > d/2");
  const double k = 0.5 * d - 1.0;
  const double nu = p - 0.5 * d;
  const double mod = std::abs(mu);
  const double shifted = std::abs(mu + Complex(0.0, 1.0));

  QuotientCheck out;
  out.q1 = std::pow(std::abs(re * re - im * im), k) * std::pow(mod, nu) /
           (std::pow(std::abs(2.0 * re), p - 1.0) * std::pow(shifted, k));
  out.q2 = std::pow(mod, nu) * std::pow(im, k) /
           (std::pow(std::abs(2.0 * re), nu) * std::pow(shifted, k));
  out.bound = std::pow(2.0, -(0.5 * p - 0.25 * d));
  out.pass = out.q1 <= out.bound * (1.0 + 1e-12);
  return out;
}

IntegralBound pr2_integral_check(double p, double tau, double omega0) {
  if (!(tau > 0.0) || !(tau < 1.0)) throw DomainError("pr2: tau must lie in (0, 1)");
  if (!(p > 0.0)) throw DomainError("pr2: p must be positive");
  if (!(omega0 >= 0.0)) throw DomainError("pr2: omega0 must be nonnegative");
  const double e = p - 1.0 - tau;
  IntegralBound out;
  out.value = integrate_endpoint_singular(
                  [&](double s) { return std::pow(1.0 + omega0 * std::pow(s, 1.0 / tau), e); },
                  0.0, 1.0, 1e-13)
                  .value /
              tau;
  out.bound = std::pow(1.0 + omega0, p - tau) / tau;
  out.pass = out.value <= out.bound * (1.0 + 1e-12);
  return out;
}

double pr2_direct(double p, double tau, double omega0) {
  if (!(tau > 0.0)) throw DomainError("pr2: integral diverges for tau <= 0");
  auto f = [&](double u) { return std::pow(u + omega0, p - 1.0 - tau) * std::pow(u, -p); };
  // u = b - omega0 on [1, inf); the tail in v = 1/u is v^(tau-1)(1 + omega0 v)^(p-1-tau).
  const double split = 4.0 * (1.0 + omega0);
  QuadratureResult out = integrate(f, 1.0, split);
  out += integrate_endpoint_singular(
      [&](double v) {
        return v == 0.0 ? 0.0 : std::pow(v, tau - 1.0) * std::pow(1.0 + omega0 * v, p - 1.0 - tau);
      },
      0.0, 1.0 / split);
  return out.value;
}

ChiIntegral chi_integral_check(double t, double q) {
  if (!(t > 0.0) || !(q > 0.0)) throw DomainError("chi_integral_check: t and q must be positive");
  const double top = std::min(t, 1.0);
  ChiIntegral out;
  out.quadrature = integrate_endpoint_singular(
                       [q](double x) { return std::pow(x, q - 1.0); },
                       0.0, top, 1e-12)
                       .value;
  out.closed_form = std::pow(top, q) / q;
  out.pass = std::abs(out.quadrature - out.closed_form) <= 1e-10 * out.closed_form;
  return out;
}

double pr3_ratio(const ExponentProfile& prof, double abs_lambda, double omega0) {
  if (!(abs_lambda > 0.0) || !(omega0 >= 0.0)) throw DomainError("pr3_ratio: bad arguments");
  const double phi1 =
      prof.eta0 + prof.eta1 - 0.5 * (prof.alpha + prof.rho - prof.delta) + prof.p - 1.0 - prof.tau;
  const double phi2 = prof.eta0 + 2.0 * prof.eta1 + prof.eta2;
  const double half_delta = 0.5 * prof.delta;
  const double decay = prof.eta1 + prof.eta2 - prof.eta3;

  const double lo = omega0 + 1.0;
  const double split = 4.0 * (lo + abs_lambda);
  QuadratureResult out = integrate(
      [&](double b) {
        return std::pow(b, phi1) / (std::pow(b + abs_lambda, phi2) * std::pow(b + 1.0, half_delta));
      },
      lo, split);
  // b = 1/v: the integrand times v^-2 behaves like v^(decay - 1) at v = 0.
  out += integrate_endpoint_singular(
      [&](double v) {
        if (v == 0.0) return 0.0;
        return std::pow(v, decay - 1.0) /
               (std::pow(1.0 + abs_lambda * v, phi2) * std::pow(1.0 + v, half_delta));
      },
      0.0, 1.0 / split);
  return out.value * std::pow(lo * (abs_lambda + 1.0), decay);
}

}  // namespace nsspec
