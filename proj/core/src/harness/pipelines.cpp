#include "nsspec/harness/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "nsspec/bgk.hpp"
#include "nsspec/error.hpp"
#include "nsspec/halfline.hpp"
#include "nsspec/harness/parallel.hpp"
#include "nsspec/quadrature.hpp"
#include "nsspec/rng.hpp"
#include "nsspec/symbol.hpp"

namespace nsspec {

namespace {

// Stream ids, so that each sweep draws from its own sequence.
enum Stream : std::uint64_t {
  kMuGrid = 1,
  kDiskGrid,
  kSq,
  kEse2,
  kDetBound,
  kDetPairs,
  kDetZero,
  kQuotient,
  kChi,
  kBlaschke,
  kModels = 1000,
};

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_uniform(CounterRng& rng, double lo, double hi) {
  return lo * std::pow(hi / lo, rng.uniform());
}

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k)
    out.push_back(n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(k) / (n - 1)));
  return out;
}

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), std::numeric_limits<double>::min()});
}

ComplexMatrix random_matrix(CounterRng& rng, int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.unit_square();
  return m;
}

// Runs `body`; domain and numerical errors become one failed row.
template <class Body>
void guarded(Report& report, const std::string& section, const std::string& stage, Body body) {
  try {
    body();
  } catch (const NumericalError& e) {
    report.error(section, stage, e.what(), true);
  } catch (const Error& e) {
    report.error(section, stage, e.what(), false);
  } catch (const std::exception& e) {
    report.error(section, stage, e.what(), true);
  }
}

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

}  // namespace

PipelineGrids make_grids(std::uint64_t seed, int mu_points, int disk_points, double radius) {
  PipelineGrids g;
  CounterRng mu_rng(seed, kMuGrid);
  for (int k = 0; k < mu_points; ++k) {
    const double re = mu_rng.uniform(-4.0, 4.0);
    const double im = log_uniform(mu_rng, 0.05, 4.0);
    g.mu.emplace_back(re, im);
  }
  CounterRng disk_rng(seed, kDiskGrid);
  for (int k = 0; k < disk_points; ++k) {
    const double r = radius * std::sqrt(disk_rng.uniform());
    const double theta = 2.0 * std::numbers::pi * disk_rng.uniform();
    g.disk.push_back(std::polar(r, theta));
  }
  return g;
}

ModelTriple abstract_model(const ExperimentConfig& cfg, std::size_t index) {
  const std::uint64_t seed = CounterRng(cfg.seed, kModels + index).next_u64();
  ModelTriple model = build_abstract_model(seed, cfg.model.dim, cfg.model.m_norm, cfg.profile.p);
  if (cfg.model.a) {
    model.a = *cfg.model.a;
    validate_model(model);
  }
  return model;
}

Report theorem1_pipeline(const ModelTriple& model, const ExponentProfile& prof,
                         const PipelineGrids& grids, const std::string& s) {
  Report r;
  guarded(r, s, "model", [&] {
    const PerturbationDeterminant pd(model);
    r.measure(s, "omega0", model.omega0);
    r.measure(s, "a", model.a);

    const Complex f_at_center = pd.little_f(Complex(-model.a * model.a, 0.0));
    r.closed_form(s, "f(-a^2)", std::abs(f_at_center - 1.0), 0.0, f_at_center == Complex(1.0, 0.0),
                  "exact");

    const double scale = 1.0 + pd.inv_a2_plus_h0().norm() + pd.inv_a2_plus_h().norm();
    const double residual = pd.resolvent_identity_residual();
    r.closed_form(s, "resolvent_identity.residual", residual, 0.0, residual <= 1e-10 * scale);

    guarded(r, s, "alternative_form", [&] {
      double worst = 0.0;
      const std::size_t probes = std::min<std::size_t>(grids.disk.size(), 20);
      for (std::size_t k = 0; k < probes; ++k) {
        const Complex lambda = phi(model.a, grids.disk[k]);
        if (std::abs(lambda + model.a * model.a) < 1e-8) continue;
        const Complex f1 = pd.little_f(lambda, 0.0);
        const Complex f2 = pd.little_f_alternative(lambda);
        worst = std::max(worst, std::abs(f1 - f2) / std::max(1.0, std::abs(f1)));
      }
      r.closed_form(s, "alternative_form.max_rel_diff", worst, 0.0, worst <= 1e-9);
    });

    guarded(r, s, "zero_correspondence", [&] {
      const double context = eigenvalue_context_scale(pd);
      const ZeroCorrespondence zc = zero_correspondence(pd, context);
      r.check(s, "zero_correspondence.max_abs_f", zc.max_abs_f_at_eigs, 1e-7 * (1.0 + context),
              zc.pass,
              "discrete=" + std::to_string(zc.discrete.size()) +
                  " excluded=" + std::to_string(zc.excluded.size()));
      r.measure(s, "zero_correspondence.min_abs_f_probe", zc.min_abs_f_on_probes);
    });

    std::vector<Complex> k1_grid = grids.mu;
    const auto from_disk = disk_to_mu_grid(model.a, grids.disk);
    k1_grid.insert(k1_grid.end(), from_disk.begin(), from_disk.end());

    GrowthEnvelope k0{};
    GrowthEnvelope k1{};
    guarded(r, s, "envelopes", [&] {
      k0 = estimate_k(pd, prof.alpha, prof.delta, prof.nu, grids.mu, EnvelopeKind::K0);
      k1 = estimate_k(pd, prof.alpha, prof.delta, prof.nu, k1_grid, EnvelopeKind::K1);
      r.measure(s, "K0", k0.k);
      r.measure(s, "K1", k1.k);
    });

    guarded(r, s, "lemma_bound", [&] {
      const WorstSlack w = lemma_bound_check(pd, k1, grids.mu);
      r.check(s, "lemma_bound.worst_slack", w.worst, 1e-9, w.pass,
              std::to_string(w.points) + " points");
    });
    guarded(r, s, "lemma_bh", [&] {
      const WorstSlack w = lemma_bh_check(pd, k1, grids.disk);
      r.check(s, "lemma_bh.worst_slack", w.worst, 1e-9, w.pass,
              std::to_string(w.points) + " points");
    });

    guarded(r, s, "transfer", [&] {
      const TransferReport t = sc3_to_sc4_transfer(model, prof, k1);
      r.check(s, "transfer.lambda_side", t.lambda_sum, t.disk_sum, t.pass,
              "termwise and summed, " + std::to_string(t.terms.size()) + " eigenvalues");
      if (t.k_scale > 0.0) r.measure(s, "transfer.disk_sum_over_K1_scale", t.disk_sum / t.k_scale);
    });

    guarded(r, s, "pr2", [&] {
      const IntegralBound b = pr2_integral_check(prof.p, prof.tau, model.omega0);
      r.check(s, "pr2.integral", b.value, b.bound, b.pass);
    });

    guarded(r, s, "functionals", [&] {
      const auto ev = discrete_eigenvalues(model.h);
      const double lhs = theorem1_lhs(ev, prof);
      r.measure(s, "theorem1.lhs", lhs);
      if (k0.k > 0.0)
        r.measure(s, "theorem1.empirical_constant", ratio_diagnostic(lhs, k0.k, model.omega0, prof));
      r.measure(s, "corollary1.lhs(eps=0.1)", corollary1_lhs(ev, prof, 0.1));
      const TailSums tails = sequence_tail_sums(ev, prof);
      r.measure(s, "tail.left", tails.left);
      r.measure(s, "tail.right", tails.right);
      r.measure(s, "tail.far", tails.far);
    });
  });
  return r;
}

Report theorem2_pipeline(const GridSpec& grid, const PotentialSpec& pot, double p, double tau,
                         std::span<const double> scales, const std::string& s) {
  Report r;
  guarded(r, s, "setup", [&] {
    const int d = grid.d;
    const ExponentProfile prof = schrodinger_profile(d, p, tau);
    const ComplexMatrix lap = build_laplacian(grid);
    const Potential v = build_potential(grid, pot, p);
    const double v_pow = std::pow(v.lp_norm, p);
    r.measure(s, "V.lp_norm_pow", v_pow);

    guarded(r, s, "refinement", [&] {
      const GridSpec fine{d, 2 * grid.n, 0.5 * grid.h};
      const double fine_pow = std::pow(grid_lp_norm(fine, potential_values(fine, pot), p), p);
      const double diff = rel_diff(v_pow, fine_pow);
      r.closed_form(s, "refinement.lp_norm_pow", fine_pow, v_pow, diff <= 0.05,
                    "n -> 2n within 5%");
      if (pot.kind == PotentialKind::GaussianComplex) {
        const double exact = std::pow(std::abs(pot.amplitude), p) *
                             std::pow(std::numbers::pi * pot.width * pot.width / p, 0.5 * d);
        r.measure(s, "refinement.rel_diff_to_continuum", rel_diff(v_pow, exact));
      }
    });

    const double kappa = p - 0.5 * d;
    const auto results = parallel_map(scales.size(), [&](std::size_t i) {
      Report part;
      const double t = scales[i];
      const std::string sec = s + ".t=" + fmt("%g", t);
      guarded(part, sec, "spectrum", [&] {
        const ComplexMatrix h = lap + t * v.matrix;
        const double scaled_pow = std::pow(t, p) * v_pow;
        std::vector<Complex> excluded;
        const auto ev = discrete_eigenvalues(h, &excluded);
        const double omega0 = compute_omega0(h).omega0;
        part.measure(sec, "omega0", omega0);
        part.measure(sec, "discrete_count", static_cast<double>(ev.size()),
                     "excluded=" + std::to_string(excluded.size()));

        const double main = schrodinger_lhs(ev, d, p, tau);
        const double general = theorem1_lhs(ev, prof);
        part.closed_form(sec, "schrodinger_vs_general", main, general,
                         rel_diff(main, general) <= 1e-12 || (main == 0.0 && general == 0.0));
        const double i3 = corollary2_lhs(ev, d, p, tau, 0.1);
        const double in_sector = frank_lhs(ev, kappa, 1.0);
        const double out_sector = frank_complement(ev, kappa, 1.0);
        double unrestricted = 0.0;
        std::size_t in_count = 0;
        std::size_t out_count = 0;
        for (const auto& e : ev) {
          unrestricted += e.multiplicity * std::pow(std::abs(e.value), kappa);
          if (std::abs(e.value.imag()) >= e.value.real())
            ++in_count;
          else
            ++out_count;
        }
        const double partition = in_sector + out_sector;
        part.check(sec, "sector_partition", partition, unrestricted,
                   in_count + out_count == ev.size() &&
                       (rel_diff(partition, unrestricted) <= 1e-12 || unrestricted == 0.0),
                   "in=" + std::to_string(in_count) + " out=" + std::to_string(out_count));
        part.check(sec, "sector_inclusion", in_sector, unrestricted,
                   in_sector <= unrestricted * (1.0 + 1e-12));

        const double q = 0.5 * d + kappa + tau;
        std::vector<Eigenvalue> right;
        std::vector<double> breaks{0.0, 1.0};
        for (const auto& e : ev) {
          if (e.value.real() <= 0.0) continue;
          right.push_back(e);
          const double b = std::abs(e.value.imag()) / e.value.real();
          if (b > 0.0 && b < 1.0) breaks.push_back(b);
        }
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
        const double moment = frank_chi_moment(right, kappa, q);
        const double integral =
            integrate_panels(
                [&](double chi) { return std::pow(chi, q - 1.0) * frank_lhs(right, kappa, chi); },
                breaks)
                .value;
        part.closed_form(sec, "frank_chi_identity", integral, moment,
                         std::abs(integral - moment) <= 1e-10 * std::max(1.0, moment));

        bool finite = std::isfinite(main) && std::isfinite(i3) && std::isfinite(in_sector) &&
                      std::isfinite(out_sector);
        part.measure(sec, "lhs", main);
        part.measure(sec, "corollary2.lhs(eps=0.1)", i3);
        part.measure(sec, "frank.lhs(chi=1)", in_sector);
        if (kappa >= 1.0) {
          const double cor = frank_cor_lhs(ev, d, p, tau);
          finite = finite && std::isfinite(cor);
          part.measure(sec, "frank_cor.lhs", cor);
          if (scaled_pow > 0.0) part.measure(sec, "frank_cor.ratio", cor / scaled_pow);
        }
        part.check(sec, "functionals_finite", finite ? 1.0 : 0.0, 1.0, finite);
        if (scaled_pow > 0.0) {
          part.measure(sec, "lhs.ratio", main / scaled_pow);
          part.measure(sec, "corollary2.ratio", i3 / scaled_pow);
          part.measure(sec, "frank.ratio", in_sector / scaled_pow);
        }
      });
      return part;
    });
    for (auto& part : results) r.append(part);
  });
  return r;
}

Report lemma_suite(const ExperimentConfig& cfg) {
  Report r;
  const std::uint64_t seed = cfg.seed;

  guarded(r, "lemma_sq", "sweep", [&] {
    CounterRng rng(seed, kSq);
    std::size_t failed = 0;
    double tightest = kInf;
    for (int k = 0; k < cfg.samples.sq; ++k) {
      const Complex mu(rng.uniform(-10.0, 10.0), log_uniform(rng, 1e-3, 10.0));
      const Bracket b = lemma_sq_check(mu);
      if (!b.pass) ++failed;
      tightest = std::min({tightest, b.value / b.lower, b.upper / b.value});
    }
    r.check("lemma_sq", "failures", static_cast<double>(failed), 0.0, failed == 0,
            std::to_string(cfg.samples.sq) + " samples, relative slack 1e-12");
    r.measure("lemma_sq", "tightest_ratio", tightest);
  });

  guarded(r, "lemma_ese2", "sweep", [&] {
    CounterRng rng(seed, kEse2);
    std::size_t failed = 0;
    double tightest = kInf;
    for (int k = 0; k < cfg.samples.ese2; ++k) {
      const double a = log_uniform(rng, 0.1, 10.0);
      Complex lambda;
      do {
        lambda = std::polar(log_uniform(rng, 1e-3, 1e3), 2.0 * std::numbers::pi * rng.uniform());
      } while (!off_slit(lambda));
      bool ok = true;
      for (const Bracket& b : lemma_ese2_check(a, lambda)) {
        ok = ok && b.pass;
        tightest = std::min({tightest, b.value / b.lower, b.upper / b.value});
      }
      if (!ok) ++failed;
    }
    r.check("lemma_ese2", "failures", static_cast<double>(failed), 0.0, failed == 0,
            std::to_string(cfg.samples.ese2) + " samples, relative slack 1e-10");
    r.measure("lemma_ese2", "tightest_ratio", tightest);
  });

  guarded(r, "determinant", "identity", [&] {
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n)
      worst = std::max(worst, std::abs(regularized_determinant(ComplexMatrix::Zero(4, 4), n) - 1.0));
    r.closed_form("determinant", "det_n(I)", worst, 0.0, worst == 0.0, "n = 1, 2, 3");
  });

  guarded(r, "determinant", "bound", [&] {
    CounterRng rng(seed, kDetBound);
    for (double p : {2.0, 3.0}) {
      std::size_t failed = 0;
      double tightest = kInf;
      for (int k = 0; k < cfg.samples.det; ++k) {
        ComplexMatrix c = random_matrix(rng, 8);
        c *= 2.0 * rng.uniform(0.01, 1.0) / schatten_norm(c, 2.0);
        const DetBoundCheck b = det_bound_check(c, p);
        if (!b.pass) ++failed;
        tightest = std::min(tightest, b.rhs / b.lhs);
      }
      const std::string name = "bound(p=" + fmt("%g", p) + ")";
      r.check("determinant", name + ".failures", static_cast<double>(failed), 0.0, failed == 0,
              std::to_string(cfg.samples.det) + " random 8x8, ||C||_2 <= 2");
      r.measure("determinant", name + ".tightest_ratio", tightest);
    }
  });

  guarded(r, "determinant", "cyclic", [&] {
    CounterRng rng(seed, kDetPairs);
    double worst = 0.0;
    for (int k = 0; k < cfg.samples.det_pairs; ++k) {
      ComplexMatrix a = random_matrix(rng, 6);
      ComplexMatrix b = random_matrix(rng, 6);
      a /= schatten_norm(a, 2.0);
      b *= 1.5 / schatten_norm(b, 2.0);
      for (int n = 1; n <= 3; ++n) {
        const Complex x = regularized_determinant(a * b, n);
        const Complex y = regularized_determinant(b * a, n);
        worst = std::max(worst, std::abs(x - y) / (1.0 + std::abs(x)));
      }
    }
    r.closed_form("determinant", "cyclic.max_scaled_diff", worst, 0.0, worst <= 1e-9,
                  "det_n(I - AB) vs det_n(I - BA), n = 1, 2, 3");
  });

  guarded(r, "determinant", "zero", [&] {
    CounterRng rng(seed, kDetZero);
    std::size_t failed = 0;
    constexpr int kTrials = 20;
    for (int k = 0; k < kTrials; ++k) {
      const ComplexMatrix s = random_matrix(rng, 5) + 3.0 * ComplexMatrix::Identity(5, 5);
      ComplexMatrix diag = ComplexMatrix::Zero(5, 5);
      for (int i = 0; i < 5; ++i) {
        Complex v;
        do v = 2.0 * rng.unit_square();
        while (std::abs(v - 1.0) < 0.1);
        diag(i, i) = v;
      }
      const Eigen::PartialPivLU<ComplexMatrix> lu(s);
      const ComplexMatrix without = s * diag * lu.inverse();
      diag(0, 0) = 1.0;
      const ComplexMatrix with = s * diag * lu.inverse();
      for (int n = 1; n <= 3; ++n) {
        if (regularized_determinant(with, n) != Complex(0.0, 0.0)) ++failed;
        if (regularized_determinant(without, n) == Complex(0.0, 0.0)) ++failed;
      }
    }
    r.check("determinant", "zero_iff_eigenvalue_one.failures", static_cast<double>(failed), 0.0,
            failed == 0, std::to_string(kTrials) + " conjugated diagonals, n = 1, 2, 3");
  });

  return r;
}

namespace {

Report symbol_measurements(const ExperimentConfig& cfg) {
  Report r;
  guarded(r, "symbol", "pr3", [&] {
    const auto& pc = cfg.profile;
    const ExponentProfile prof = make_profile(pc.p, pc.alpha, pc.delta, pc.nu, pc.tau);
    double lo = kInf;
    double hi = 0.0;
    for (double w : {0.0, 1.0, 10.0})
      for (double mod : logspace(1e-3, 1e3, 7)) {
        const double v = pr3_ratio(prof, mod, w);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    r.measure("symbol", "pr3.min_ratio", lo);
    r.measure("symbol", "pr3.max_ratio", hi);
  });
  return r;
}

}  // namespace

Report symbol_suite(const ExperimentConfig& cfg, bool measurements) {
  Report r;
  const std::string s = "symbol";

  guarded(r, s, "closed_forms", [&] {
    const double v2 = lp_resolvent_norm({Complex(-1.0, 0.0), 2.0, 2}).value;
    const double v3 = lp_resolvent_norm({Complex(-1.0, 0.0), 2.0, 3}).value;
    const double pi = std::numbers::pi;
    r.closed_form(s, "lp_norm(d=2,p=2,l=-1)", v2, pi, std::abs(v2 - pi) <= 1e-8);
    r.closed_form(s, "lp_norm(d=3,p=2,l=-1)", v3, pi * pi, std::abs(v3 - pi * pi) <= 1e-8);
  });

  const double p = cfg.symbol.p;
  const auto res = logspace(0.1, 100.0, cfg.symbol.re_points);
  const auto ims = logspace(0.01, 10.0, cfg.symbol.im_points);
  for (int d : cfg.symbol.dims) {
    const std::string sec = s + ".d=" + std::to_string(d);
    if (measurements) guarded(r, sec, "show1", [&] {
      double worst_ratio = 0.0;
      double worst_es1 = 0.0;
      double worst_conj = 0.0;
      const double expected = 0.5 * sphere_area(d);
      for (double re : res) {
        for (double im : ims) {
          const SymbolParams sp{Complex(re, im), p, d};
          const Es1Check e = es1_identity_check(sp);
          worst_es1 = std::max(worst_es1, rel_diff(e.ratio, expected));
          worst_ratio = std::max(worst_ratio, e.lhs / show1_bracket(sp));
          const double conj = lp_resolvent_norm({Complex(re, -im), p, d}).value;
          worst_conj = std::max(worst_conj, rel_diff(conj, e.lhs));
        }
      }
      r.measure(sec, "show1.max_ratio", worst_ratio, "p=" + fmt("%g", p));
      r.closed_form(sec, "es1.max_rel_dev", worst_es1, 0.0, worst_es1 <= 1e-6,
                    "ratio against |S^(d-1)|/2 = " + fmt("%.17g", expected));
      r.closed_form(sec, "conjugation.max_rel_diff", worst_conj, 0.0, worst_conj <= 1e-9);
    });

    if (measurements) guarded(r, sec, "halfplane", [&] {
      double worst = 0.0;
      for (double mod : logspace(0.01, 100.0, cfg.symbol.re_points))
        for (int k = 0; k < cfg.symbol.im_points; ++k) {
          // Angle from the positive imaginary axis; written out so that
          // Re lambda is never a rounding error above zero.
          const double phi = 0.5 * std::numbers::pi * static_cast<double>(k) /
                             std::max(1, cfg.symbol.im_points - 1);
          const Complex lambda(-mod * std::sin(phi), mod * std::cos(phi));
          worst = std::max(worst, halfplane_ratio({lambda, p, d}));
        }
      r.measure(sec, "halfplane.max_ratio", worst);
    });

    guarded(r, sec, "kj_ll", [&] {
      std::size_t failed = 0;
      for (double q : logspace(1e-2, 1e2, cfg.samples.kj))
        if (!kj_ll_bound_check(q, 1.0, p, d).pass) ++failed;
      r.check(sec, "kj_ll.failures", static_cast<double>(failed), 0.0, failed == 0,
              std::to_string(cfg.samples.kj) + " ratios l0/l1 in [1e-2, 1e2]");
    });
  }

  guarded(r, s, "quotient", [&] {
    CounterRng rng(cfg.seed, kQuotient);
    struct Case {
      int d;
      double p;
    };
    std::vector<Case> cases{{3, 2.0}};
    for (int d : cfg.symbol.dims)
      if (!(d == 3 && p == 2.0)) cases.push_back({d, p});
    for (const Case& c : cases) {
      std::size_t failed = 0;
      double max_q1 = 0.0;
      double max_q2 = 0.0;
      for (int k = 0; k < cfg.samples.quotient; ++k) {
        const double re = (rng.uniform() < 0.5 ? -1.0 : 1.0) * log_uniform(rng, 1e-2, 1e2);
        double im = 0.0;
        do im = std::abs(re) * rng.uniform();
        while (!(im > 0.0));
        const QuotientCheck q = po_quotient_check(Complex(re, im), c.p, c.d);
        if (!q.pass) ++failed;
        max_q1 = std::max(max_q1, q.q1 / q.bound);
        max_q2 = std::max(max_q2, q.q2);
      }
      const std::string name = "quotient(d=" + std::to_string(c.d) + ",p=" + fmt("%g", c.p) + ")";
      r.check(s, name + ".failures", static_cast<double>(failed), 0.0, failed == 0,
              std::to_string(cfg.samples.quotient) + " samples, bound 2^-(p/2-d/4)");
      r.measure(s, name + ".max_q1_over_bound", max_q1);
      r.measure(s, name + ".sup_q2", max_q2);
    }
  });

  guarded(r, s, "pr2", [&] {
    std::size_t failed = 0;
    double tightest = kInf;
    for (double pp : {1.0, 1.5, 2.0, 3.0, 4.0})
      for (double tau : {0.1, 0.3, 0.5, 0.7, 0.9})
        for (double w : {0.0, 0.5, 1.0, 4.0, 10.0}) {
          const IntegralBound b = pr2_integral_check(pp, tau, w);
          if (!b.pass) ++failed;
          tightest = std::min(tightest, b.bound / b.value);
        }
    r.check(s, "pr2.grid_failures", static_cast<double>(failed), 0.0, failed == 0, "5x5x5 grid");
    r.measure(s, "pr2.tightest_ratio", tightest);
    const IntegralBound eq = pr2_integral_check(1.0, 0.5, 0.0);
    r.closed_form(s, "pr2.equality_case", eq.value, 2.0,
                  eq.pass && std::abs(eq.value - 2.0) <= 1e-12 && eq.bound == 2.0,
                  "p=1 tau=0.5 omega0=0");
  });

  guarded(r, s, "chi", [&] {
    CounterRng rng(cfg.seed, kChi);
    std::size_t failed = 0;
    double worst = 0.0;
    for (int k = 0; k < cfg.samples.chi; ++k) {
      const double t = log_uniform(rng, 0.01, 3.0);
      const double q = rng.uniform(0.2, 5.0);
      const ChiIntegral c = chi_integral_check(t, q);
      if (!c.pass) ++failed;
      worst = std::max(worst, rel_diff(c.quadrature, c.closed_form));
    }
    r.check(s, "chi_identity.failures", static_cast<double>(failed), 0.0, failed == 0,
            std::to_string(cfg.samples.chi) + " samples, relative 1e-10");
    r.measure(s, "chi_identity.max_rel_diff", worst);
  });

  if (measurements) r.append(symbol_measurements(cfg));
  return r;
}

Report bgk_suite(const ExperimentConfig& cfg) {
  Report r;
  const std::string s = "bgk";
  const double tau = cfg.profile.tau;

  guarded(r, s, "blaschke", [&] {
    CounterRng rng(cfg.seed, kBlaschke);
    const BoundaryData bd{1.0, {{Complex(1.0, 0.0), 2.0}, {Complex(-1.0, 0.0), 0.5}}, tau};
    const auto lattice = polar_lattice();
    double worst_sum = 0.0;
    double worst_k = 0.0;
    constexpr int kOracles = 5;
    for (int k = 0; k < kOracles; ++k) {
      ZeroSet zs;
      for (int j = 0; j < 3; ++j) {
        const Complex z = std::polar(0.9 * std::sqrt(rng.uniform(0.01, 1.0)),
                                     2.0 * std::numbers::pi * rng.uniform());
        zs.zeros.push_back({z, 1 + static_cast<int>(rng.uniform() < 0.5)});
      }
      const BlaschkeProduct h = blaschke_oracle(zs);
      ZeroSet doubled = zs;
      for (auto& z : doubled.zeros) z.multiplicity *= 2;
      const double sum1 = zero_sum(zs, bd);
      const double sum2 = zero_sum(doubled, bd);
      const double k1 = growth_k(h, bd, lattice);
      const double k2 = growth_k([&](Complex z) { const Complex v = h(z); return v * v; }, bd, lattice);
      worst_sum = std::max(worst_sum, rel_diff(sum2, 2.0 * sum1));
      if (k1 > 0.0 || k2 > 0.0) worst_k = std::max(worst_k, rel_diff(k2, 2.0 * k1));
      if (k1 > 0.0) r.measure(s, "oracle" + std::to_string(k) + ".zero_sum_over_K", sum1 / k1);
    }
    r.closed_form(s, "doubling.zero_sum", worst_sum, 0.0, worst_sum <= 1e-12);
    r.closed_form(s, "doubling.growth_K", worst_k, 0.0, worst_k <= 1e-12);
  });

  guarded(r, s, "envelope_example", [&] {
    const BoundaryData bd{0.0, {{Complex(1.0, 0.0), 1.0}}, tau};
    const double k = growth_k(
        [](Complex z) { return std::exp(1.0 / (1.0 - z) - 1.0); }, bd);
    r.check(s, "exp_example.K", k, 1.0, k <= 1.0, "h = exp(1/(1-z) - 1)");
  });

  guarded(r, s, "exponent_identity", [&] {
    std::size_t failed = 0;
    std::size_t count = 0;
    for (int i = 0; i <= 60; ++i)
      for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        ++count;
        if (!exponent_identity_holds(-3.0 + 0.1 * i, t)) ++failed;
      }
    r.check(s, "exponent_identity.failures", static_cast<double>(failed), 0.0, failed == 0,
            std::to_string(count) + " (rho, tau) pairs, rho in [-3, 3]");
  });

  const auto& pc = cfg.profile;
  const auto count = static_cast<std::size_t>(cfg.model.type == ModelType::Abstract ? cfg.model.count : 0);
  const auto parts = parallel_map(count, [&](std::size_t i) {
    Report part;
    const std::string sec = s + ".model" + std::to_string(i);
    guarded(part, sec, "model", [&] {
      const ModelTriple model = abstract_model(cfg, i);
      const ExponentProfile prof = make_profile(pc.p, pc.alpha, pc.delta, pc.nu, pc.tau);
      const PerturbationDeterminant pd(model);
      const PipelineGrids grids =
          make_grids(cfg.seed + i, cfg.grids.mu_points, cfg.grids.disk_points, cfg.grids.disk_radius);
      std::vector<Complex> k1_grid = grids.mu;
      const auto extra = disk_to_mu_grid(model.a, grids.disk);
      k1_grid.insert(k1_grid.end(), extra.begin(), extra.end());
      const GrowthEnvelope k1 =
          estimate_k(pd, prof.alpha, prof.delta, prof.nu, k1_grid, EnvelopeKind::K1);

      const TransferReport t = sc3_to_sc4_transfer(model, prof, k1);
      part.check(sec, "transfer.lambda_side", t.lambda_sum, t.disk_sum, t.pass);

      const BoundaryData bd{prof.alpha,
                            {{Complex(1.0, 0.0), positive_part(prof.rho)},
                             {Complex(-1.0, 0.0), prof.nu}},
                            prof.tau};
      ZeroSet zs;
      for (const auto& term : t.terms) zs.zeros.push_back({phi_inv(model.a, term.lambda), term.multiplicity});
      const double zsum = zero_sum(zs, bd);
      const double k = growth_k(
          [&](Complex z) {
            try {
              return pd.little_h(z);
            } catch (const DomainError&) {
              return Complex(std::nan(""), 0.0);
            }
          },
          bd, polar_lattice(16, 64));
      part.measure(sec, "zero_sum", zsum);
      part.measure(sec, "growth_K", k);
      if (k > 0.0) part.measure(sec, "zero_sum_over_K", zsum / k);
    });
    return part;
  });
  for (auto& part : parts) r.append(part);
  return r;
}

}  // namespace nsspec
