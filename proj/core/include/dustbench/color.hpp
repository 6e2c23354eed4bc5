#pragma once

#include <string>
#include <string_view>

#include "dustbench/image.hpp"

namespace dustbench {

// Global color deviation of a dust scene: the ambient tint the scene
// converges to with distance. Channels are strictly ordered r > g > b.
class ColorDeviation {
 public:
  // Throws InvalidArgument if a channel is outside [0,1] or r > g > b fails.
  ColorDeviation(double r, double g, double b);

  double r() const { return rgb_[0]; }
  double g() const { return rgb_[1]; }
  double b() const { return rgb_[2]; }
  const Pixel& rgb() const { return rgb_; }

  // Per-channel 1 - value; subtracted from the clear scene before attenuation.
  Pixel complement() const { return {1.0 - rgb_[0], 1.0 - rgb_[1], 1.0 - rgb_[2]}; }

  // "#RRGGBB", uppercase, channels rounded to the nearest byte.
  std::string hex() const;

  bool operator==(const ColorDeviation&) const = default;

 private:
  Pixel rgb_;
};

// Parses "#RRGGBB" (hex digits in either case). Throws InvalidArgument on a
// malformed code or when the r > g > b ordering does not hold.
ColorDeviation parse_hex(std::string_view code);

struct Lab {
  double l = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// sRGB (IEC 61966-2-1 transfer) -> linear RGB -> XYZ (D65) -> CIELAB.
Lab srgb_to_lab(const Pixel& rgb);
ImageLAB rgb_to_lab(const ImageRGB& image);

// BT.601 luma of a normalized pixel.
inline double luma(const Pixel& p) {
  return 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
}

}  // namespace dustbench
