#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dustbench/palette.hpp"
#include "dustbench/sampling.hpp"

namespace dustbench {

struct CorpusPair {
  std::filesystem::path clear;
  std::filesystem::path depth;
};

struct SubsetSpec {
  std::string name;
  IntensityClass cls;
  int count = 0;
};

struct DatasetConfig {
  std::uint64_t master_seed = 0;
  Palette palette = default_palette();
  std::vector<SubsetSpec> subsets;
  bool normalize_depth = true;
};

enum class EntryStatus { kOk, kSkipped };

struct ManifestEntry {
  std::size_t index = 0;
  std::string clear;
  std::string depth;
  std::string output;  // relative to the dataset root; empty when skipped
  std::string a_s_hex;
  double beta = 0.0;
  std::uint64_t seed = 0;
  EntryStatus status = EntryStatus::kOk;
  std::string error;
  double clip_fraction = 0.0;
};

struct ManifestSubset {
  std::string name;
  IntensityClass cls;
  std::vector<ManifestEntry> entries;
};

// Declarative record of a generated benchmark. Serialized as JSON with
// top-level {version, master_seed, palette, normalize_depth, subsets}.
struct DatasetManifest {
  static constexpr int kVersion = 1;

  int version = kVersion;
  std::uint64_t master_seed = 0;
  std::vector<std::string> palette;
  bool normalize_depth = true;
  std::vector<ManifestSubset> subsets;

  std::size_t entry_count() const;
  std::size_t skipped_count() const;

  // Invariant violations, empty when the manifest is consistent: every beta
  // inside its subset range, every A_s in the palette, every seed derived
  // from (master seed, subset, index) and reproducing the recorded draw.
  std::vector<std::string> validate() const;

  std::string to_json() const;
  static DatasetManifest from_json(std::string_view text);

  void save(const std::filesystem::path& path) const;
  static DatasetManifest load(const std::filesystem::path& path);
};

inline constexpr std::string_view kManifestFileName = "manifest.json";

// Synthesizes every subset of `config` over the corpus (entry i of a subset
// uses corpus pair i mod corpus size), writes images under `root` and the
// manifest to root/manifest.json. Unreadable pairs and shape mismatches are
// recorded as skipped entries; they never abort the build.
DatasetManifest build_dataset(const std::vector<CorpusPair>& corpus,
                              const DatasetConfig& config,
                              const std::filesystem::path& root);

// Re-synthesizes every non-skipped entry from its recorded parameters into
// `root`. Output files are byte-identical to the original build.
void regenerate_dataset(const DatasetManifest& manifest,
                        const std::filesystem::path& root);

// Directory-safe form of a subset name.
std::string sanitize_name(std::string_view name);

}  // namespace dustbench
