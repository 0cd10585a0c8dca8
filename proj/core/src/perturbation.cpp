#include "nsspec/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "nsspec/error.hpp"
#include "nsspec/halfline.hpp"

namespace nsspec {

namespace {

constexpr double kDiscreteSlitDistance = 1e-10;
constexpr double kBoundSlack = 1e-9;

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix shifted_inverse(const ComplexMatrix& a, double shift) {
  ComplexMatrix s = a;
  s.diagonal().array() += shift;
  return Eigen::PartialPivLU<ComplexMatrix>(s).inverse();
}

double lambda_min_hermitian(const ComplexMatrix& a) {
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

const ModelTriple& validated(const ModelTriple& model) {
  validate_model(model);
  return model;
}

}  // namespace

void validate_model(const ModelTriple& model) {
  require_square_finite(model.h0, "model H0");
  require_square_finite(model.m, "model M");
  require_square_finite(model.h, "model H");
  const auto n = model.h0.rows();
  if (model.m.rows() != n || model.h.rows() != n)
    throw DomainError("model: H0, M and H must have the same dimension");

  const double scale = 1.0 + model.h0.cwiseAbs().maxCoeff();
  if ((model.h0 - model.h0.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw DomainError("model: H0 is not selfadjoint");
  if (lambda_min_hermitian(model.h0) < -1e-10)
    throw DomainError("model: H0 has negative spectrum");
  if ((model.h - (model.h0 + model.m)).cwiseAbs().maxCoeff() != 0.0)
    throw DomainError("model: H differs from H0 + M");

  const double margin = std::max(0.0, -lambda_min_hermitian(model.h));
  if (!(model.omega0 >= margin - 1e-10)) {
    std::ostringstream os;
    os << "model: omega0 = " << model.omega0 << " does not bound the numerical range margin "
       << margin;
    throw DomainError(os.str());
  }
  if (!(model.a > 0.0) || !(model.a * model.a > model.omega0))
    throw DomainError("model: need a > 0 with a^2 > omega0");
}

PerturbationDeterminant::PerturbationDeterminant(ModelTriple model)
    : model_(validated(model)),
      h0_solver_(model_.h0),
      r_(shifted_inverse(model_.h, model_.a * model_.a)),
      r0_(shifted_inverse(model_.h0, model_.a * model_.a)),
      rm_(r_ * model_.m) {}

void PerturbationDeterminant::require_domain(Complex lambda) const {
  if (!off_slit(lambda)) {
    std::ostringstream os;
    os << "perturbation determinant: " << lambda << " lies on [0, inf)";
    throw DomainError(os.str());
  }
}

ComplexMatrix PerturbationDeterminant::big_f(Complex lambda) const {
  require_domain(lambda);
  const double a2 = model_.a * model_.a;
  const auto n = model_.dim();
  if (lambda == Complex{-a2, 0.0}) return ComplexMatrix::Zero(n, n);
  return (lambda + a2) * (rm_ * h0_solver_.inverse(lambda));
}

ComplexMatrix PerturbationDeterminant::big_f_alternative(Complex lambda) const {
  require_domain(lambda);
  const double a2 = model_.a * model_.a;
  if (lambda == Complex{-a2, 0.0})
    throw DomainError("alternative representation is undefined at lambda = -a^2");
  ComplexMatrix left = -r0_;
  left.diagonal().array() += 1.0 / (lambda + a2);
  return Eigen::PartialPivLU<ComplexMatrix>(left).solve(r_ - r0_);
}

Complex PerturbationDeterminant::little_f(Complex lambda, std::optional<double> snap_tol) const {
  return regularized_determinant(big_f(lambda), order(), snap_tol);
}

Complex PerturbationDeterminant::little_f_alternative(Complex lambda) const {
  return regularized_determinant(big_f_alternative(lambda), order());
}

Complex PerturbationDeterminant::little_h(Complex z) const {
  return little_f(phi(model_.a, z));
}

double PerturbationDeterminant::resolvent_identity_residual() const {
  return (r0_ - r_ - rm_ * r0_).norm();
}

double PerturbationDeterminant::product_form_residual(Complex lambda) const {
  const double a2 = model_.a * model_.a;
  const auto n = model_.dim();
  const ComplexMatrix left = identity(n) - (lambda + a2) * r_;
  const ComplexMatrix right = identity(n) - (lambda + a2) * r0_;
  const ComplexMatrix product = Eigen::PartialPivLU<ComplexMatrix>(right.transpose())
                                    .solve(left.transpose())
                                    .transpose();
  return (product - (identity(n) - big_f(lambda))).cwiseAbs().maxCoeff();
}

ComplexMatrix PerturbationDeterminant::envelope_operator(Complex mu, EnvelopeKind kind) const {
  if (!(mu.imag() > 0.0)) throw DomainError("envelope: mu must satisfy Im mu > 0");
  const ComplexMatrix x = h0_solver_.inverse(mu * mu);
  return kind == EnvelopeKind::K0 ? ComplexMatrix(model_.m * x) : ComplexMatrix(rm_ * x);
}

std::vector<Eigenvalue> discrete_eigenvalues(const ComplexMatrix& h,
                                             std::vector<Complex>* excluded) {
  const auto all = eigenvalue_list(h);
  std::vector<Complex> kept;
  for (const Complex& l : all) {
    if (dist_halfline(l) > kDiscreteSlitDistance)
      kept.push_back(l);
    else if (excluded)
      excluded->push_back(l);
  }
  if (kept.empty()) return {};
  return cluster_eigenvalues(kept, default_cluster_tol(h)).items;
}

ZeroCorrespondence zero_correspondence(const PerturbationDeterminant& pd, double context_scale) {
  ZeroCorrespondence out;
  out.discrete = discrete_eigenvalues(pd.model().h, &out.excluded);
  const double threshold = 1e-7 * (1.0 + context_scale);

  // Probe circles of radius half the gap to the nearest other eigenvalue
  // (or to the slit) around each eigenvalue; f must not vanish there. Near a
  // pole of F the regularizing exponential can make |f| tiny on the circle,
  // so no comparison with the centre value is made.
  std::vector<Complex> others;
  for (const auto& e : out.discrete) others.push_back(e.value);
  for (const auto& x : out.excluded) others.push_back(x);

  double min_probe = std::numeric_limits<double>::infinity();
  bool probes_ok = true;
  constexpr int kProbePoints = 8;
  for (const auto& e : out.discrete) {
    const double centre = std::abs(pd.little_f(e.value, 0.0));
    out.max_abs_f_at_eigs = std::max(out.max_abs_f_at_eigs, centre);
    double gap = dist_halfline(e.value);
    for (const Complex& o : others)
      if (o != e.value) gap = std::min(gap, std::abs(o - e.value));
    const double radius = 0.5 * gap;
    for (int k = 0; k < kProbePoints; ++k) {
      const double theta = 2.0 * std::numbers::pi * (k + 0.5) / kProbePoints;
      const Complex probe = e.value + std::polar(radius, theta);
      if (!off_slit(probe, kDiscreteSlitDistance)) continue;
      try {
        const double v = std::abs(pd.little_f(probe, 0.0));
        min_probe = std::min(min_probe, v);
        if (!(v > 0.0)) probes_ok = false;
      } catch (const DomainError&) {
        // probe landed on the spectrum of H0
      }
    }
  }
  out.min_abs_f_on_probes = std::isfinite(min_probe) ? min_probe : 0.0;

  const bool eigs_ok = out.max_abs_f_at_eigs < threshold;
  out.pass = eigs_ok && probes_ok;
  return out;
}

double eigenvalue_context_scale(const PerturbationDeterminant& pd) {
  double scale = 0.0;
  for (const auto& e : discrete_eigenvalues(pd.model().h)) {
    try {
      const MultiplicityProbe probe = multiplicity_probe(pd, e.value);
      scale = std::max(scale, 1e-8 * probe.abs_df * (1.0 + std::abs(e.value)));
    } catch (const DomainError&) {
      // difference stencil touched the spectrum of H0
    }
  }
  return scale;
}

GrowthEnvelope estimate_k(const PerturbationDeterminant& pd, double alpha, double delta,
                          double nu, std::span<const Complex> mu_grid, EnvelopeKind kind) {
  if (mu_grid.empty()) throw DomainError("estimate_k: empty grid");
  if (alpha < 0.0 || delta < 0.0 || nu < 0.0)
    throw DomainError("estimate_k: exponents must be nonnegative");
  const double p = pd.model().p.p();
  const double c = kind == EnvelopeKind::K0 ? 1.0 : pd.model().a;

  GrowthEnvelope env{0.0, alpha, delta, nu, kind};
  for (const Complex& mu : mu_grid) {
    const double norm = schatten_norm_pow(pd.envelope_operator(mu, kind), p);
    const double weight = std::pow(mu.imag(), alpha) * std::pow(std::abs(mu), nu) /
                          std::pow(std::abs(mu + Complex{0.0, c}), delta);
    env.k = std::max(env.k, norm * weight);
  }
  return env;
}

WorstSlack lemma_bound_check(const PerturbationDeterminant& pd, const GrowthEnvelope& env,
                             std::span<const Complex> mu_grid) {
  if (env.kind != EnvelopeKind::K1) throw DomainError("lemma_bound_check needs a K1 envelope");
  const double p = pd.model().p.p();
  const double gamma = gamma_constant(p);
  const Complex ia{0.0, pd.model().a};

  WorstSlack out{-std::numeric_limits<double>::infinity(), mu_grid.size(), true};
  for (const Complex& mu : mu_grid) {
    const double lhs = std::log(std::abs(pd.little_f(mu * mu, 0.0)));
    const double rhs = gamma * env.k * std::pow(std::abs(mu - ia), p) *
                       std::pow(std::abs(mu + ia), env.delta + p) /
                       (std::pow(mu.imag(), env.alpha) * std::pow(std::abs(mu), env.nu));
    out.worst = std::max(out.worst, lhs - rhs);
  }
  out.pass = out.worst <= kBoundSlack;
  return out;
}

WorstSlack lemma_bh_check(const PerturbationDeterminant& pd, const GrowthEnvelope& env,
                          std::span<const Complex> disk_grid) {
  if (env.kind != EnvelopeKind::K1) throw DomainError("lemma_bh_check needs a K1 envelope");
  const double p = pd.model().p.p();
  const double a = pd.model().a;
  const double rho = env.delta + 2.0 * (p - env.alpha) - env.nu;
  const double constant =
      gamma_constant(p) * std::pow(2.0, env.delta + 2.0 * p) * env.k * std::pow(a, env.alpha + rho);

  WorstSlack out{-std::numeric_limits<double>::infinity(), disk_grid.size(), true};
  for (const Complex& z : disk_grid) {
    const double r = std::abs(z);
    const double lhs = std::log(std::abs(pd.little_h(z)));
    const double rhs = r == 0.0 ? 0.0
                                : constant * std::pow(r, p) /
                                      (std::pow(1.0 - r, env.alpha) *
                                       std::pow(std::abs(z + 1.0), env.nu) *
                                       std::pow(std::abs(z - 1.0), rho));
    out.worst = std::max(out.worst, lhs - rhs);
  }
  out.pass = out.worst <= kBoundSlack;
  return out;
}

std::vector<Complex> disk_to_mu_grid(double a, std::span<const Complex> disk_grid) {
  std::vector<Complex> out;
  out.reserve(disk_grid.size());
  for (const Complex& z : disk_grid) {
    if (!(std::abs(z) < 1.0)) throw DomainError("disk grid point outside the unit disk");
    out.push_back(Complex{0.0, a} * (1.0 + z) / (1.0 - z));
  }
  return out;
}

MultiplicityProbe multiplicity_probe(const PerturbationDeterminant& pd, Complex lambda0) {
  const double step = 1e-5 * (1.0 + std::abs(lambda0));
  const Complex f0 = pd.little_f(lambda0, 0.0);
  const Complex fp = pd.little_f(lambda0 + step, 0.0);
  const Complex fm = pd.little_f(lambda0 - step, 0.0);
  return {std::abs(f0), std::abs((fp - fm) / (2.0 * step)),
          std::abs((fp - 2.0 * f0 + fm) / (step * step))};
}

}  // namespace nsspec
