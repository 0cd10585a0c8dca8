#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nsspec/functionals.hpp"
#include "nsspec/harness/config.hpp"
#include "nsspec/harness/report.hpp"
#include "nsspec/models.hpp"
#include "nsspec/perturbation.hpp"

namespace nsspec {

struct PipelineGrids {
  std::vector<Complex> mu;    ///< upper half-plane sample points
  std::vector<Complex> disk;  ///< points with |z| <= radius
};

/// Seeded grids: mu with Re in [-4, 4] and log-uniform Im in [0.05, 4];
/// disk points uniform by area in |z| <= radius.
PipelineGrids make_grids(std::uint64_t seed, int mu_points, int disk_points, double radius);

/// Explicit sub-steps of the general eigenvalue bound on one model (growth
/// bounds for f and h, zero correspondence, disk transfer, the b-integral)
/// and the empirical constant of the final inequality.
Report theorem1_pipeline(const ModelTriple& model, const ExponentProfile& prof,
                         const PipelineGrids& grids, const std::string& section);

/// -Laplace_h + t V for each scale t: eigenvalue functionals, their ratios
/// to ||tV||_p^p, the sector partition and grid refinement of ||V||_p^p.
Report theorem2_pipeline(const GridSpec& grid, const PotentialSpec& pot, double p, double tau,
                         std::span<const double> scales, const std::string& section);

/// Square-root and distortion bounds, determinant properties.
Report lemma_suite(const ExperimentConfig& cfg);

/// Resolvent-symbol norms and the scalar integral identities. Without
/// `measurements` only the checked rows are produced.
Report symbol_suite(const ExperimentConfig& cfg, bool measurements = true);

/// Zero sums, growth envelopes and the exponent identity.
Report bgk_suite(const ExperimentConfig& cfg);

/// Abstract models seeded from cfg.seed, one per index.
ModelTriple abstract_model(const ExperimentConfig& cfg, std::size_t index);

}  // namespace nsspec
