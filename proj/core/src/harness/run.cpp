#include "nsspec/harness/run.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <thread>

#include "nsspec/error.hpp"
#include "nsspec/harness/parallel.hpp"
#include "nsspec/harness/pipelines.hpp"

namespace nsspec {

std::size_t thread_cap() {
  if (const char* env = std::getenv("SPECFORGE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

ExponentProfile abstract_profile(const ExperimentConfig& cfg) {
  const auto& pc = cfg.profile;
  return make_profile(pc.p, pc.alpha, pc.delta, pc.nu, pc.tau);
}

Report model_sweep(const ExperimentConfig& cfg, std::size_t count) {
  const ExponentProfile prof = abstract_profile(cfg);
  auto parts = parallel_map(count, [&](std::size_t i) {
    const std::string section = "model" + std::to_string(i);
    Report part;
    try {
      const ModelTriple model = abstract_model(cfg, i);
      const PipelineGrids grids = make_grids(cfg.seed + i, cfg.grids.mu_points,
                                             cfg.grids.disk_points, cfg.grids.disk_radius);
      part = theorem1_pipeline(model, prof, grids, section);
    } catch (const NumericalError& e) {
      part.error(section, "build", e.what(), true);
    } catch (const Error& e) {
      part.error(section, "build", e.what(), false);
    }
    return part;
  });

  Report out;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (auto& part : parts) {
    for (const Row& row : part.rows)
      if (row.name == "theorem1.empirical_constant") {
        lo = std::min(lo, row.value);
        hi = std::max(hi, row.value);
      }
    out.append(std::move(part));
  }
  if (hi > 0.0) {
    out.measure("sweep", "empirical_constant.min", lo);
    out.measure("sweep", "empirical_constant.max", hi);
  }
  return out;
}

Report schrodinger(const ExperimentConfig& cfg, bool all_scales) {
  const auto& m = cfg.model;
  std::vector<double> scales = m.scales;
  if (!all_scales) scales.resize(1);
  return theorem2_pipeline(m.grid, m.potential, cfg.profile.p, cfg.profile.tau, scales,
                           "schrodinger");
}

}  // namespace

Report run(const ExperimentConfig& cfg) {
  validate_config(cfg);
  Report report;
  report.meta.kind = to_string(cfg.kind);
  report.meta.seed = cfg.seed;
  report.meta.config_digest = fnv1a64(canonical_json(cfg));

  const bool abstract = cfg.model.type == ModelType::Abstract;
  switch (cfg.kind) {
    case ExperimentKind::VerifyLemmas:
      report.append(lemma_suite(cfg));
      if (abstract) report.append(model_sweep(cfg, static_cast<std::size_t>(cfg.model.count)));
      report.append(symbol_suite(cfg, false));
      break;
    case ExperimentKind::Spectrum:
      report.append(abstract ? model_sweep(cfg, 1) : schrodinger(cfg, false));
      break;
    case ExperimentKind::Sweep:
      report.append(abstract ? model_sweep(cfg, static_cast<std::size_t>(cfg.model.count))
                             : schrodinger(cfg, true));
      break;
    case ExperimentKind::Bgk:
      report.append(bgk_suite(cfg));
      break;
    case ExperimentKind::Symbol:
      report.append(symbol_suite(cfg, true));
      break;
  }
  return report;
}

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "both") return OutputFormat::Both;
  throw ConfigError("unknown output format '" + name + "' (expected csv, json or both)");
}

void write_report(const Report& report, const std::filesystem::path& dir, OutputFormat format) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + (dir / name).string());
    out << text;
  };
  if (format != OutputFormat::Json) write("report.csv", report.to_csv());
  if (format != OutputFormat::Csv) write("report.json", report.to_json());
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace nsspec
