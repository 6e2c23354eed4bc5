#include "dustbench/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>

namespace dustbench {

namespace {

double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

}  // namespace

HistogramSet channel_histograms(const ImageRGB& image, int bins) {
  if (bins < 2) throw InvalidArgument("histogram needs at least 2 bins");
  if (image.empty()) throw InvalidArgument("histogram of an empty image");

  HistogramSet out;
  out.bins = bins;
  const auto data = image.data();
  const std::size_t n = image.pixel_count();
  std::vector<double> values(n);

  for (int c = 0; c < 3; ++c) {
    ChannelStats& stats = out.channels[static_cast<std::size_t>(c)];
    std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
    const double origin = data[static_cast<std::size_t>(c)];
    double sum = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      const double v = data[3 * p + static_cast<std::size_t>(c)];
      values[p] = v - origin;
      sum += values[p];
      const auto bin = std::min(static_cast<std::size_t>(v * bins),
                                static_cast<std::size_t>(bins - 1));
      ++counts[bin];
    }
    const double shift = sum / static_cast<double>(n);
    stats.mean = origin + shift;
    double sq = 0.0;
    for (double v : values) sq += (v - shift) * (v - shift);
    stats.stddev = std::sqrt(sq / static_cast<double>(n));

    stats.frequencies.resize(counts.size());
    for (std::size_t b = 0; b < counts.size(); ++b) {
      stats.frequencies[b] =
          static_cast<double>(counts[b]) / static_cast<double>(n);
    }
    std::sort(values.begin(), values.end());
    stats.p025 = quantile(values, 0.025);
    stats.p975 = quantile(values, 0.975);
  }
  return out;
}

void write_histogram_csv(const HistogramSet& histograms, std::ostream& out) {
  out << "bin_index,freq_r,freq_g,freq_b\n";
  out << std::setprecision(10);
  for (int b = 0; b < histograms.bins; ++b) {
    const auto i = static_cast<std::size_t>(b);
    out << b << ',' << histograms.channels[0].frequencies[i] << ','
        << histograms.channels[1].frequencies[i] << ','
        << histograms.channels[2].frequencies[i] << '\n';
  }
}

}  // namespace dustbench
