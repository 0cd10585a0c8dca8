#pragma once

#include <filesystem>
#include <string>

#include "nsspec/harness/config.hpp"
#include "nsspec/harness/report.hpp"

namespace nsspec {

/// Dispatches on cfg.kind. Stage errors become failed rows; the run
/// continues. The metadata timestamp is left empty.
Report run(const ExperimentConfig& cfg);

enum class OutputFormat { Csv, Json, Both };

OutputFormat output_format_from_string(const std::string& name);

/// Writes report.csv and/or report.json into `dir` (created if missing).
void write_report(const Report& report, const std::filesystem::path& dir, OutputFormat format);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace nsspec
