#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dustbench/report.hpp"

namespace dustbench {

struct TimingRow {
  std::string operation;
  int size = 0;  // square edge length in pixels
  int repetitions = 0;
  int warmup = 0;
  std::vector<double> samples;  // seconds, one per repetition
  double mean = 0.0;
};

struct TimingOptions {
  std::vector<int> sizes = {256, 512, 1024};
  int repetitions = 3;
  int warmup = 1;
  std::uint64_t seed = 0;
  EvaluationOptions metrics;
};

struct TimingReport {
  std::vector<TimingRow> rows;

  // Largest |mean - average(samples)| over rows.
  double max_mean_discrepancy() const;
  void write_csv(std::ostream& out) const;
  std::string to_json() const;
};

inline const std::vector<std::string>& timed_operations() {
  static const std::vector<std::string> ops = {"synthesize", "evaluate"};
  return ops;
}

TimingReport run_timing(const TimingOptions& options);

}  // namespace dustbench
