#pragma once

// Experiment configuration: one JSON document, unknown keys rejected.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsspec/models.hpp"

namespace nsspec {

enum class ExperimentKind { VerifyLemmas, Spectrum, Sweep, Bgk, Symbol };

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

/// Exponents of the growth envelope. For Schrodinger models alpha, delta and
/// nu are derived from (d, p) and the values here are ignored.
struct ProfileConfig {
  double p = 2.0;
  double tau = 0.5;
  double alpha = 1.0;
  double delta = 0.5;
  double nu = 0.5;
};

enum class ModelType { Abstract, Schrodinger };

struct ModelConfig {
  ModelType type = ModelType::Abstract;
  // abstract
  int dim = 10;
  double m_norm = 1.0;
  int count = 10;
  std::optional<double> a;
  // schrodinger
  GridSpec grid{2, 24, 0.5};
  PotentialSpec potential{PotentialKind::GaussianComplex, {-3.0, 2.0}, 1.0, 1.0, 1.0, {}};
  std::vector<double> scales{0.5, 1.0, 2.0, 4.0};
};

struct GridConfig {
  int mu_points = 100;
  int disk_points = 100;
  double disk_radius = 0.95;
};

/// Sample counts of the property sweeps.
struct SampleConfig {
  int sq = 10000;
  int ese2 = 10000;
  int det = 200;
  int det_pairs = 100;
  int quotient = 10000;
  int chi = 100;
  int kj = 25;
};

struct SymbolConfig {
  std::vector<int> dims{2, 3, 4};
  double p = 3.0;
  int re_points = 5;
  int im_points = 5;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::VerifyLemmas;
  std::uint64_t seed = 1;
  std::string output = "out";
  ProfileConfig profile;
  ModelConfig model;
  GridConfig grids;
  SampleConfig samples;
  SymbolConfig symbol;
};

/// Throws ConfigError on malformed JSON, unknown keys, wrong types or
/// parameters rejected by the downstream modules.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Checks every downstream constraint; throws ConfigError.
void validate_config(const ExperimentConfig& cfg);

/// Deterministic JSON rendering of the effective configuration.
std::string canonical_json(const ExperimentConfig& cfg);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace nsspec
