#include "dustbench/quantize.hpp"

#include <cmath>

namespace dustbench {

ImageRGB color_quantize(const ImageRGB& image, int levels) {
  if (levels < 2 || levels > 256) {
    throw InvalidArgument("quantization levels must be in [2,256], got " +
                          std::to_string(levels));
  }
  const double steps = levels - 1;
  const auto src = image.data();
  std::vector<double> out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    out[i] = std::floor(src[i] * steps + 0.5) / steps;
  }
  return ImageRGB(image.width(), image.height(), std::move(out));
}

}  // namespace dustbench
