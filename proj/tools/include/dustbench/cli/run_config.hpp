#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dustbench/dataset.hpp"
#include "dustbench/priors.hpp"
#include "dustbench/report.hpp"

namespace dustbench::cli {

// Everything a command needs to reproduce its outputs. Loaded from a JSON
// config file; paths in the file are resolved against the file's directory.
struct RunConfig {
  std::uint64_t master_seed = 0;
  std::optional<std::filesystem::path> palette_path;
  Palette palette = default_palette();
  std::vector<CorpusPair> corpus;
  std::vector<SubsetSpec> subsets;
  std::map<std::string, BetaRange> beta_overrides;
  bool normalize_depth = true;
  std::filesystem::path output_dir = "dustbench_out";

  // analysis
  PriorThresholds thresholds;
  int k = 15;
  int quantize_levels = 0;  // 0 disables quantization before clustering
  std::size_t sample_cap = 50000;

  EvaluationOptions metrics;

  DatasetConfig dataset_config() const;
  std::string to_json() const;
  static RunConfig from_json(std::string_view text,
                             const std::filesystem::path& base_dir);
  static RunConfig load(const std::filesystem::path& path);
};

// Four subsets, one per intensity class, named after their class.
std::vector<SubsetSpec> default_subsets(int count);

}  // namespace dustbench::cli
