#include "nsspec/bgk.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nsspec/error.hpp"
#include "nsspec/halfline.hpp"

namespace nsspec {

void validate_boundary(const BoundaryData& bd) {
  if (!(bd.alpha >= 0.0)) throw DomainError("boundary: alpha must be nonnegative");
  if (!(bd.tau > 0.0)) throw DomainError("boundary: tau must be positive");
  for (std::size_t j = 0; j < bd.points.size(); ++j) {
    const auto& pt = bd.points[j];
    if (std::abs(std::abs(pt.xi) - 1.0) > 1e-12) throw DomainError("boundary: xi must be unimodular");
    if (!(pt.beta >= 0.0)) throw DomainError("boundary: beta must be nonnegative");
    for (std::size_t i = 0; i < j; ++i)
      if (std::abs(bd.points[i].xi - pt.xi) <= 1e-12)
        throw DomainError("boundary: points must be distinct");
  }
}

void validate_zero_set(const ZeroSet& zs) {
  for (const auto& zero : zs.zeros) {
    if (!(std::abs(zero.z) < 1.0)) throw DomainError("zero set: zeros must lie inside the disk");
    if (zero.multiplicity < 1) throw DomainError("zero set: multiplicity must be positive");
  }
}

double zero_sum(const ZeroSet& zs, const BoundaryData& bd) {
  validate_boundary(bd);
  validate_zero_set(zs);
  double total = 0.0;
  for (const auto& zero : zs.zeros) {
    double term = std::pow(1.0 - std::abs(zero.z), bd.alpha + 1.0 + bd.tau);
    for (const auto& pt : bd.points)
      term *= std::pow(std::abs(zero.z - pt.xi), positive_part(pt.beta - 1.0 + bd.tau));
    total += zero.multiplicity * term;
  }
  return total;
}

std::vector<Complex> polar_lattice(int radii, int angles) {
  if (radii < 2 || angles < 1) throw DomainError("polar_lattice: need >= 2 radii and >= 1 angle");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(radii) * static_cast<std::size_t>(angles));
  for (int k = 0; k < radii; ++k) {
    const double r = 1.0 - std::pow(1e-4, static_cast<double>(k) / (radii - 1));
    for (int j = 0; j < angles; ++j)
      out.push_back(std::polar(r, 2.0 * std::numbers::pi * j / angles));
  }
  return out;
}

double growth_k(const DiskFunction& h, const BoundaryData& bd, std::span<const Complex> lattice) {
  validate_boundary(bd);
  const Complex h0 = h(Complex(0.0, 0.0));
  if (!(std::abs(h0 - 1.0) <= 1e-8)) {
    std::ostringstream os;
    os << "growth_k: h(0) = " << h0 << " is not normalized to 1";
    throw DomainError(os.str());
  }
  double best = 0.0;
  for (const Complex& z : lattice) {
    if (!(std::abs(z) < 1.0)) throw DomainError("growth_k: sample outside the open disk");
    const double mod = std::abs(h(z));
    if (!std::isfinite(mod) || mod < 1e-300) continue;
    double weight = std::pow(1.0 - std::abs(z), bd.alpha);
    for (const auto& pt : bd.points) weight *= std::pow(std::abs(z - pt.xi), pt.beta);
    best = std::max(best, std::log(mod) * weight);
  }
  return best;
}

double growth_k(const DiskFunction& h, const BoundaryData& bd) {
  const auto lattice = polar_lattice();
  return growth_k(h, bd, lattice);
}

Complex BlaschkeProduct::operator()(Complex z) const {
  Complex out(1.0, 0.0);
  for (const auto& zero : zeros.zeros) {
    Complex factor;
    if (zero.z == Complex(0.0, 0.0))
      factor = z;
    else if (normalized)
      factor = (zero.z - z) / ((1.0 - std::conj(zero.z) * z) * zero.z);
    else
      factor = (std::abs(zero.z) / zero.z) * (zero.z - z) / (1.0 - std::conj(zero.z) * z);
    out *= std::pow(factor, zero.multiplicity);
  }
  return out;
}

BlaschkeProduct blaschke_oracle(ZeroSet zeros) {
  validate_zero_set(zeros);
  BlaschkeProduct out{std::move(zeros)};
  for (const auto& zero : out.zeros.zeros)
    if (zero.z == Complex(0.0, 0.0)) out.normalized = false;
  out.value_at_zero = out(Complex(0.0, 0.0));
  return out;
}

bool exponent_identity_holds(double rho, double tau) {
  return positive_part(positive_part(rho) - 1.0 + tau) == positive_part(rho - 1.0 + tau);
}

TransferReport sc3_to_sc4_transfer(const ModelTriple& model, const ExponentProfile& prof,
                                   const GrowthEnvelope& env) {
  validate_model(model);
  const double a = model.a;
  const double a2 = a * a;
  TransferReport out;
  out.constant = std::pow(2.0, prof.eta0 + prof.eta2 - 2.0 * prof.eta1) *
                 std::pow(a, 2.0 * prof.eta0 + 2.0 * prof.eta1);
  out.k_scale = env.k * std::pow(a, prof.alpha + prof.rho);

  constexpr double slack = 1e-10;
  bool termwise = true;
  for (const Eigenvalue& ev : discrete_eigenvalues(model.h, &out.excluded)) {
    const Complex z = phi_inv(a, ev.value);
    const double mod = std::abs(ev.value);
    TransferTerm term{ev.value, ev.multiplicity};
    term.disk_term = std::pow(1.0 - std::abs(z), 2.0 * prof.eta1) *
                     std::pow(std::abs(z + 1.0), 2.0 * prof.eta2) *
                     std::pow(std::abs(z - 1.0), 2.0 * prof.eta0);
    term.lambda_term = out.constant * std::pow(dist_halfline(ev.value), 2.0 * prof.eta1) /
                       (std::pow(mod, prof.eta1 - prof.eta2) *
                        std::pow(mod + a2, prof.eta0 + 2.0 * prof.eta1 + prof.eta2));
    termwise = termwise && term.lambda_term <= term.disk_term * (1.0 + slack);
    out.disk_sum += ev.multiplicity * term.disk_term;
    out.lambda_sum += ev.multiplicity * term.lambda_term;
    out.terms.push_back(term);
  }
  out.pass = termwise && out.lambda_sum <= out.disk_sum * (1.0 + slack);
  return out;
}

}  // namespace nsspec
