#include "dustbench/nr_metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "dustbench/color.hpp"

namespace dustbench {

NoReferenceScores simple_nr_metrics(const ImageRGB& image) {
  const int w = image.width();
  const int h = image.height();
  if (w < 3 || h < 3) {
    throw InvalidArgument("no-reference metrics need at least 3x3 pixels");
  }
  std::vector<double> y(image.pixel_count());
  for (int py = 0; py < h; ++py) {
    for (int px = 0; px < w; ++px) {
      y[static_cast<std::size_t>(py) * w + px] = 255.0 * luma(image.pixel(px, py));
    }
  }
  const auto at = [&](int px, int py) {
    return y[static_cast<std::size_t>(py) * w + px];
  };

  NoReferenceScores s;
  double ag = 0.0;
  for (int py = 0; py + 1 < h; ++py) {
    for (int px = 0; px + 1 < w; ++px) {
      const double dx = at(px + 1, py) - at(px, py);
      const double dy = at(px, py + 1) - at(px, py);
      ag += std::sqrt(0.5 * (dx * dx + dy * dy));
    }
  }
  s.average_gradient = ag / (static_cast<double>(w - 1) * (h - 1));

  double ei = 0.0;
  for (int py = 1; py + 1 < h; ++py) {
    for (int px = 1; px + 1 < w; ++px) {
      const double gx = (at(px + 1, py - 1) + 2.0 * at(px + 1, py) + at(px + 1, py + 1)) -
                        (at(px - 1, py - 1) + 2.0 * at(px - 1, py) + at(px - 1, py + 1));
      const double gy = (at(px - 1, py + 1) + 2.0 * at(px, py + 1) + at(px + 1, py + 1)) -
                        (at(px - 1, py - 1) + 2.0 * at(px, py - 1) + at(px + 1, py - 1));
      ei += std::sqrt(gx * gx + gy * gy);
    }
  }
  s.edge_intensity = ei / (static_cast<double>(w - 2) * (h - 2));

  std::array<std::size_t, 256> counts{};
  for (double v : y) {
    const auto bin = static_cast<int>(std::floor(v + 0.5));
    ++counts[static_cast<std::size_t>(std::clamp(bin, 0, 255))];
  }
  const double n = static_cast<double>(y.size());
  double entropy = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    entropy -= p * std::log2(p);
  }
  s.entropy = entropy;
  return s;
}

}  // namespace dustbench
