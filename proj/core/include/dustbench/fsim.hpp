#pragma once

#include "dustbench/image.hpp"

namespace dustbench {

// Feature-similarity parameters. Defaults are those of the original FSIM
// formulation: a 4-scale, 4-orientation log-Gabor bank for phase congruency,
// Scharr gradients, and the published stabilizing constants.
struct FsimConfig {
  int scales = 4;
  int orientations = 4;
  double min_wavelength = 6.0;
  double mult = 2.0;
  double sigma_onf = 0.55;
  double d_theta_on_sigma = 1.2;
  double noise_k = 2.0;
  double epsilon = 1e-4;
  double t1 = 0.85;   // phase congruency
  double t2 = 160.0;  // gradient magnitude
  double t3 = 200.0;  // I chrominance
  double t4 = 200.0;  // Q chrominance
  double lambda = 0.03;

  void validate() const;
};

struct FsimScores {
  double fsim = 0.0;   // luma only
  double fsimc = 0.0;  // with I/Q chrominance
};

// Both images are taken on the 0-255 scale. Inputs larger than 256 pixels on
// the short side are box-filtered and decimated by round(min_dim / 256) first.
// Throws InvalidArgument if either dimension is below 32.
FsimScores fsim(const ImageRGB& test, const ImageRGB& ref,
                const FsimConfig& cfg = {});

// Phase congruency map of a single plane (row-major, `width` x `height`).
std::vector<double> phase_congruency(const std::vector<double>& plane, int width,
                                     int height, const FsimConfig& cfg = {});

}  // namespace dustbench
