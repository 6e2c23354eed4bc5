#pragma once

#include <array>
#include <ostream>
#include <vector>

#include "dustbench/image.hpp"

namespace dustbench {

struct ChannelStats {
  std::vector<double> frequencies;  // normalized, sums to 1
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  double p025 = 0.0;    // central 95% interval, linear interpolation
  double p975 = 0.0;
};

struct HistogramSet {
  int bins = 0;
  std::array<ChannelStats, 3> channels;
};

// Uniform-width histogram of each channel over [0,1]; 1.0 falls in the last
// bin. Moments and quantiles come from the pixel values, not the bins.
// Throws InvalidArgument if bins < 2 or the image is empty.
HistogramSet channel_histograms(const ImageRGB& image, int bins = 256);

// CSV with header "bin_index,freq_r,freq_g,freq_b".
void write_histogram_csv(const HistogramSet& histograms, std::ostream& out);

}  // namespace dustbench
