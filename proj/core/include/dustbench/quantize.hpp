#pragma once

#include "dustbench/image.hpp"

namespace dustbench {

// Snaps each channel independently to the nearest of `levels` uniformly
// spaced values k / (levels - 1). Idempotent. Throws InvalidArgument unless
// 2 <= levels <= 256.
ImageRGB color_quantize(const ImageRGB& image, int levels);

}  // namespace dustbench
