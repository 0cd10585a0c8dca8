#include "nsspec/functionals.hpp"

#include <cmath>
#include <sstream>

#include "nsspec/error.hpp"
#include "nsspec/halfline.hpp"

namespace nsspec {

namespace {

// Accumulates weight(l) * multiplicity over eigenvalues off the slit.
template <class Pred, class Weight>
double sum_over(std::span<const Eigenvalue> ev, Pred include, Weight weight) {
  double sum = 0.0;
  for (const auto& e : ev) {
    if (!off_slit(e.value) || !include(e.value)) continue;
    sum += e.multiplicity * weight(e.value);
  }
  return sum;
}

constexpr auto kAll = [](Complex) { return true; };

void require_schrodinger(int d, double p, double tau) {
  if (d < 2) throw DomainError("Schrodinger profile needs d >= 2");
  if (!(p >= 2.0) || !(p > 0.5 * d)) throw DomainError("Schrodinger profile needs p >= 2 and p > d/2");
  if (!(tau > 0.0 && tau < 1.0)) throw DomainError("tau must lie in (0, 1)");
}

}  // namespace

ExponentProfile make_profile(double p, double alpha, double delta, double nu, double tau) {
  if (!(p > 0.0)) throw DomainError("profile: p must be positive");
  if (!(tau > 0.0 && tau < 1.0)) throw DomainError("profile: tau must lie in (0, 1)");
  if (alpha < 0.0 || delta < 0.0 || nu < 0.0)
    throw DomainError("profile: alpha, delta, nu must be nonnegative");

  ExponentProfile prof{p, alpha, delta, nu, tau};
  prof.rho = delta + 2.0 * (p - alpha) - nu;
  prof.eta0 = 0.5 * positive_part(prof.rho - 1.0 + tau);
  prof.eta1 = 0.5 * (alpha + 1.0 + tau);
  prof.eta2 = 0.5 * positive_part(nu - 1.0 + tau);
  prof.eta3 = 0.5 * (alpha + nu - delta) - tau;

  if (!(prof.eta1 + prof.eta2 - prof.eta3 > 0.0)) {
    std::ostringstream os;
    os << "profile: eta1 + eta2 - eta3 = " << prof.eta1 + prof.eta2 - prof.eta3
       << " is not positive";
    throw DomainError(os.str());
  }
  return prof;
}

ExponentProfile schrodinger_profile(int d, double p, double tau) {
  require_schrodinger(d, p, tau);
  const double half_d = 0.5 * d;
  auto prof = make_profile(p, p - 1.0, half_d - 1.0, p - half_d, tau);
  // rho = d - p + 1 and eta3 = p - d/2 - tau in closed form.
  if (std::abs(prof.rho - (d - p + 1.0)) > 1e-12 * (1.0 + std::abs(prof.rho)) ||
      std::abs(prof.eta3 - (p - half_d - tau)) > 1e-12 * (1.0 + std::abs(prof.eta3)))
    throw NumericalError("schrodinger_profile: closed-form exponents disagree");
  return prof;
}

double theorem1_lhs(std::span<const Eigenvalue> ev, const ExponentProfile& prof) {
  return sum_over(ev, kAll, [&](Complex l) {
    const double m = std::abs(l);
    return std::pow(dist_halfline(l), 2.0 * prof.eta1) /
           (std::pow(m, prof.eta1 - prof.eta2) *
            std::pow(m + 1.0, prof.eta1 + prof.eta2 - prof.eta3));
  });
}

double corollary1_lhs(std::span<const Eigenvalue> ev, const ExponentProfile& prof, double eps) {
  if (!(eps > 0.0)) throw DomainError("corollary1_lhs: eps must be positive");
  return sum_over(
      ev, [&](Complex l) { return std::abs(l) >= eps; },
      [&](Complex l) {
        return std::pow(dist_halfline(l), 2.0 * prof.eta1) /
               std::pow(std::abs(l), 2.0 * prof.eta1 - prof.eta3);
      });
}

double schrodinger_lhs(std::span<const Eigenvalue> ev, int d, double p, double tau) {
  require_schrodinger(d, p, tau);
  const double quarter_d = 0.25 * d;
  double inner;
  double outer;
  if (p - 0.5 * d >= 1.0 - tau) {
    inner = quarter_d + 0.5;
    outer = quarter_d - 0.5 + 2.0 * tau;
  } else {
    inner = 0.5 * (p + tau);
    outer = 0.5 * (d - p + 3.0 * tau);
  }
  return sum_over(ev, kAll, [&](Complex l) {
    const double m = std::abs(l);
    return std::pow(dist_halfline(l), p + tau) / (std::pow(m, inner) * std::pow(m + 1.0, outer));
  });
}

double corollary2_lhs(std::span<const Eigenvalue> ev, int d, double p, double tau, double eps) {
  if (!(eps > 0.0)) throw DomainError("corollary2_lhs: eps must be positive");
  return sum_over(
      ev, [&](Complex l) { return std::abs(l) >= eps; },
      [&](Complex l) {
        return std::pow(dist_halfline(l), p + tau) / std::pow(std::abs(l), 0.5 * d + 2.0 * tau);
      });
}

double frank_lhs(std::span<const Eigenvalue> ev, double kappa, double chi) {
  if (!(kappa >= 1.0)) throw DomainError("frank_lhs: kappa must be >= 1");
  if (!(chi > 0.0)) throw DomainError("frank_lhs: chi must be positive");
  return sum_over(
      ev, [&](Complex l) { return std::abs(l.imag()) >= chi * l.real(); },
      [&](Complex l) { return std::pow(std::abs(l), kappa); });
}

double frank_complement(std::span<const Eigenvalue> ev, double kappa, double chi) {
  if (!(chi > 0.0)) throw DomainError("frank_complement: chi must be positive");
  return sum_over(
      ev, [&](Complex l) { return std::abs(l.imag()) < chi * l.real(); },
      [&](Complex l) { return std::pow(std::abs(l), kappa); });
}

double frank_cor_lhs(std::span<const Eigenvalue> ev, int d, double p, double tau) {
  if (!(p - 0.5 * d >= 1.0)) throw DomainError("frank_cor_lhs: needs p - d/2 >= 1");
  if (!(tau > 0.0 && tau < 1.0)) throw DomainError("tau must lie in (0, 1)");
  return sum_over(ev, kAll, [&](Complex l) {
    return std::pow(dist_halfline(l), p + tau) / std::pow(std::abs(l), 0.5 * d + tau);
  });
}

double frank_chi_moment(std::span<const Eigenvalue> ev, double kappa, double q) {
  if (!(q > 0.0)) throw DomainError("frank_chi_moment: q must be positive");
  return sum_over(
      ev, [](Complex l) { return l.real() > 0.0; },
      [&](Complex l) {
        const double t = std::min(1.0, std::abs(l.imag()) / l.real());
        return std::pow(std::abs(l), kappa) * std::pow(t, q) / q;
      });
}

TailSums sequence_tail_sums(std::span<const Eigenvalue> ev, const ExponentProfile& prof,
                            double separation) {
  if (!(separation > 0.0)) throw DomainError("sequence_tail_sums: separation must be positive");
  TailSums out;
  out.left = sum_over(
      ev, [](Complex l) { return l.real() <= 0.0; },
      [&](Complex l) { return std::pow(std::abs(l), prof.eta1 + prof.eta2); });
  out.right = sum_over(
      ev, [](Complex l) { return l.real() > 0.0; },
      [&](Complex l) {
        return std::pow(std::abs(l.imag()), 2.0 * prof.eta1) /
               std::pow(std::abs(l), prof.eta1 - prof.eta2);
      });
  out.far = sum_over(
      ev, [&](Complex l) { return dist_halfline(l) >= separation; },
      [&](Complex l) { return std::pow(std::abs(l), -(2.0 * prof.eta1 - prof.eta3)); });
  return out;
}

double ratio_diagnostic(double lhs, double k, double omega0, const ExponentProfile& prof) {
  const double denom = k * std::pow(1.0 + omega0, prof.omega_exponent());
  if (!(denom > 0.0)) throw DomainError("ratio_diagnostic: zero denominator");
  return lhs / denom;
}

}  // namespace nsspec
