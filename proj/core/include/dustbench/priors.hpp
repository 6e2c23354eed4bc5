#pragma once

#include <array>
#include <string>

#include "dustbench/image.hpp"

namespace dustbench {

// Thresholds in normalized intensity units.
struct PriorThresholds {
  double sigma_max = 0.18;  // concentration: every channel sigma at most this
  double delta_min = 0.02;  // shifting: channel means at least this far apart
};

// How well an image matches the three sandstorm color priors: channel
// histograms that are shifted apart, concentrated, and ordered R > G > B.
struct PriorReport {
  bool sequential_ok = false;
  std::array<double, 3> means{};
  std::array<double, 3> concentration{};  // per-channel sigma
  double shifting_score = 0.0;            // min |mean_i - mean_j|
  PriorThresholds thresholds;
  bool verdict = false;

  std::string to_json() const;
};

PriorReport prior_characteristics(const ImageRGB& image,
                                  const PriorThresholds& thresholds = {});

}  // namespace dustbench
