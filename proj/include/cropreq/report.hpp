#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cropreq {

inline constexpr const char* kVersion = "1.0.0";

struct RunConfig {
  std::string national_path;
  std::optional<std::string> department_path;
  std::optional<std::string> rainfall_path;

  double alpha = 0.01;          // trend / correlation significance level
  double req_step = 0.005;      // requirement scan step (relative fraction)
  double req_cap = 0.50;        // requirement scan cap
  double grid_range = 0.50;     // grid half-range
  double grid_step = 0.01;      // grid step
  std::vector<double> strata_cutoffs = {10, 20, 30, 100};  // percent
  bool strata_weighted = false;
  bool require_cropland_column = false;
  std::string out_dir = ".";
  std::uint64_t seed = 0;  // echoed in the manifest; analyses are deterministic
};

enum class Analysis { Describe, Trend, Cascade, Requirements, Grids, Stratify, Rainfall };

const std::set<Analysis>& all_analyses();

struct OutputFile {
  std::string name;
  std::string content;
};

struct ReportBundle {
  std::vector<OutputFile> files;  // in manifest order, manifest.txt last
  std::vector<std::pair<std::string, std::string>> skipped;  // file, reason
  std::string summary;  // human-readable run summary (stdout, not a file)
};

/// Computes the enabled analyses entirely in memory. Throws
/// ValidationError when an input fails validation and std::runtime_error
/// on analysis failures, so a failed run writes nothing.
ReportBundle build_report(const RunConfig& config, const std::set<Analysis>& enabled);

void write_bundle(const ReportBundle& bundle, const std::string& out_dir);

/// Full pipeline: build every analysis the inputs allow and write the
/// bundle to config.out_dir.
ReportBundle run(const RunConfig& config);

}  // namespace cropreq
