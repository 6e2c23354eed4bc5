#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dustbench/fsim.hpp"
#include "dustbench/image.hpp"
#include "dustbench/metrics.hpp"

namespace dustbench {

// Report columns, in output order.
enum class Metric { kMse, kPsnr, kSsim, kFsimc, kCie94, kCiede2000, kAg, kEi, kIe };
inline constexpr std::size_t kMetricCount = 9;
inline constexpr std::array<Metric, kMetricCount> kAllMetrics = {
    Metric::kMse,   Metric::kPsnr,      Metric::kSsim, Metric::kFsimc, Metric::kCie94,
    Metric::kCiede2000, Metric::kAg, Metric::kEi,   Metric::kIe};

std::string_view metric_name(Metric m);
bool is_full_reference(Metric m);
Metric parse_metric(std::string_view name);

struct EvaluationOptions {
  std::array<bool, kMetricCount> enabled = {true, true, true, true, true,
                                            true, true, true, true};
  SsimConfig ssim;
  FsimConfig fsim;

  bool is_enabled(Metric m) const { return enabled[static_cast<std::size_t>(m)]; }
};

using MetricValues = std::array<std::optional<double>, kMetricCount>;

// Scores one image. Full-reference metrics are computed only when `ref` is
// given. Throws on shape mismatch or images too small for a metric.
MetricValues compute_metrics(const ImageRGB& test, const ImageRGB* ref,
                             const EvaluationOptions& options = {});

struct PairSpec {
  std::filesystem::path test;
  std::optional<std::filesystem::path> reference;
};

struct MetricRow {
  std::string test;
  std::string reference;
  MetricValues values;
  std::string error;  // non-empty marks a failed pair

  bool ok() const { return error.empty(); }
};

struct MetricReport {
  std::vector<MetricRow> rows;  // input order
  MetricValues aggregate;       // arithmetic mean over rows with a value
  std::array<std::size_t, kMetricCount> aggregate_counts{};

  bool empty() const { return rows.empty(); }
  std::size_t error_count() const;
  // Metrics that at least one row carries, in canonical order.
  std::vector<Metric> columns() const;

  // One row per pair then an "aggregate" row. PSNR infinity prints "+inf".
  void write_csv(std::ostream& out) const;
  std::string to_json() const;
};

// Aggregates rows that were already scored.
MetricReport make_report(std::vector<MetricRow> rows);

// Loads and scores every pair; a pair that fails to load or score becomes an
// error row and does not affect the others.
MetricReport evaluate_pairs(const std::vector<PairSpec>& pairs,
                            const EvaluationOptions& options = {});

// Reads {"pairs": [{"test": ..., "reference": ...}, ...]}; "reference" may be
// omitted or null. Relative paths resolve against the file's directory.
std::vector<PairSpec> load_pairs(const std::filesystem::path& path);

std::string format_metric_value(Metric m, double value);

}  // namespace dustbench
