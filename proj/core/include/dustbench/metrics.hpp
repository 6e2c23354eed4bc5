#pragma once

#include <limits>
#include <vector>

#include "dustbench/image.hpp"

namespace dustbench {

// Mean squared difference over all pixels and channels on the 0-255 scale.
double mse(const ImageRGB& test, const ImageRGB& ref);

// 10 log10(255^2 / MSE) in dB; +infinity when the images are identical.
double psnr(const ImageRGB& test, const ImageRGB& ref);

inline bool is_perfect_psnr(double db) {
  return db == std::numeric_limits<double>::infinity();
}

struct SsimConfig {
  int window = 11;     // odd side length of the Gaussian window
  double sigma = 1.5;  // Gaussian standard deviation in pixels
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 1.0;

  double c1() const { return (k1 * dynamic_range) * (k1 * dynamic_range); }
  double c2() const { return (k2 * dynamic_range) * (k2 * dynamic_range); }
  void validate() const;  // throws InvalidArgument
};

// Normalized 1-D Gaussian taps; the 2-D window is their outer product.
std::vector<double> gaussian_taps(int window, double sigma);

// Mean SSIM over every full window position on the BT.601 luma plane (no
// padding). Symmetric in its arguments. Throws InvalidArgument if either
// dimension is smaller than the window.
double ssim(const ImageRGB& test, const ImageRGB& ref, const SsimConfig& cfg = {});

}  // namespace dustbench
