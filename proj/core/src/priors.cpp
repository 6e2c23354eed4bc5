#include "dustbench/priors.hpp"

#include <algorithm>
#include <cmath>

#include "dustbench/histogram.hpp"
#include "json.hpp"

namespace dustbench {

PriorReport prior_characteristics(const ImageRGB& image,
                                  const PriorThresholds& thresholds) {
  const HistogramSet h = channel_histograms(image, 2);
  PriorReport r;
  r.thresholds = thresholds;
  for (std::size_t c = 0; c < 3; ++c) {
    r.means[c] = h.channels[c].mean;
    r.concentration[c] = h.channels[c].stddev;
  }
  r.sequential_ok = r.means[0] > r.means[1] && r.means[1] > r.means[2];
  r.shifting_score = std::min({std::abs(r.means[0] - r.means[1]),
                               std::abs(r.means[1] - r.means[2]),
                               std::abs(r.means[0] - r.means[2])});
  const bool concentrated =
      std::all_of(r.concentration.begin(), r.concentration.end(),
                  [&](double s) { return s <= thresholds.sigma_max; });
  r.verdict = r.sequential_ok && concentrated &&
              r.shifting_score >= thresholds.delta_min;
  return r;
}

std::string PriorReport::to_json() const {
  const nlohmann::json j = {
      {"sequential_ok", sequential_ok},
      {"means", means},
      {"concentration_scores", concentration},
      {"shifting_score", shifting_score},
      {"thresholds",
       {{"sigma_max", thresholds.sigma_max}, {"delta_min", thresholds.delta_min}}},
      {"verdict", verdict},
  };
  return j.dump(2);
}

}  // namespace dustbench
