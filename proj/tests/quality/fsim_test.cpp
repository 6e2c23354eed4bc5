#include "dustbench/fsim.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "dustbench/error.hpp"
#include "dustbench/scenes.hpp"
#include "support/test_util.hpp"

namespace dustbench {
namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

const Mat3 kRgbToYiq = {{{0.299, 0.587, 0.114},
                         {0.596, -0.274, -0.322},
                         {0.211, -0.523, 0.312}}};

Mat3 inverse(const Mat3& m) {
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int a = (j + 1) % 3, b = (j + 2) % 3, c = (i + 1) % 3, d = (i + 2) % 3;
      r[i][j] = (m[a][c] * m[b][d] - m[a][d] * m[b][c]) / det;
    }
  }
  return r;
}

Pixel yiq_to_rgb(double y, double i, double q) {
  static const Mat3 inv = inverse(kRgbToYiq);
  Pixel p;
  for (int k = 0; k < 3; ++k) p[k] = inv[k][0] * y + inv[k][1] * i + inv[k][2] * q;
  return p;
}

ImageRGB add_noise(const ImageRGB& img, double sigma, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> d(img.data().begin(), img.data().end());
  for (double& v : d) v = std::clamp(v + sigma * rng.normal(), 0.0, 1.0);
  return ImageRGB(img.width(), img.height(), std::move(d));
}

TEST(Fsim, SelfComparisonIsOne) {
  const Scene s = make_outdoor_scene(64, 48, 3);
  const FsimScores f = fsim(s.clear, s.clear);
  EXPECT_NEAR(f.fsim, 1.0, 1e-6);
  EXPECT_NEAR(f.fsimc, 1.0, 1e-6);
  Rng rng(81);
  const ImageRGB noise = testing::random_image(rng, 40, 33);
  EXPECT_NEAR(fsim(noise, noise).fsimc, 1.0, 1e-6);
}

TEST(Fsim, SwappedChromaLowersOnlyTheColorScore) {
  const int n = 64;
  ImageRGB ref(n, n), swapped(n, n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const double Y = 0.5 + 0.2 * std::sin(x * 0.3) * std::cos(y * 0.2);
      const double I = 0.08 * std::cos(x * 0.15 + y * 0.05);
      const double Q = 0.06 * std::sin(y * 0.25);
      ref.set_pixel(x, y, yiq_to_rgb(Y, I, Q));
      swapped.set_pixel(x, y, yiq_to_rgb(Y, Q, I));
    }
  }
  const FsimScores f = fsim(swapped, ref);
  EXPECT_NEAR(f.fsim, 1.0, 1e-6);
  EXPECT_LT(f.fsimc, 1.0);
  EXPECT_LT(f.fsimc, f.fsim);
}

TEST(Fsim, MoreNoiseScoresLower) {
  const Scene s = make_outdoor_scene(96, 80, 4);
  const double mild = fsim(add_noise(s.clear, 0.05, 1), s.clear).fsimc;
  const double strong = fsim(add_noise(s.clear, 0.15, 2), s.clear).fsimc;
  EXPECT_GT(mild, strong);
  EXPECT_GE(strong, 0.0);
  EXPECT_LE(mild, 1.0);
}

TEST(Fsim, FlatImages) {
  const ImageRGB a = ImageRGB::filled(40, 40, {0.3, 0.3, 0.3});
  const ImageRGB b = ImageRGB::filled(40, 40, {0.6, 0.5, 0.4});
  EXPECT_NEAR(fsim(a, a).fsimc, 1.0, 1e-6);
  const FsimScores f = fsim(b, a);
  EXPECT_GE(f.fsimc, 0.0);
  EXPECT_LE(f.fsimc, 1.0);
}

TEST(Fsim, LargeInputsAreDownsampled) {
  const Scene s = make_gradient_scene(600, 520, 5);
  EXPECT_NEAR(fsim(s.clear, s.clear).fsimc, 1.0, 1e-6);
}

TEST(Fsim, Preconditions) {
  EXPECT_THROW(fsim(ImageRGB(31, 40), ImageRGB(31, 40)), InvalidArgument);
  EXPECT_THROW(fsim(ImageRGB(40, 40), ImageRGB(41, 40)), DimensionMismatch);
  FsimConfig bad;
  bad.scales = 0;
  EXPECT_THROW(bad.validate(), InvalidArgument);
}

TEST(PhaseCongruency, RangeAndStepResponse) {
  const int n = 48;
  std::vector<double> plane(n * n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) plane[y * n + x] = x < n / 2 ? 50.0 : 200.0;
  }
  const std::vector<double> pc = phase_congruency(plane, n, n);
  ASSERT_EQ(pc.size(), plane.size());
  for (double v : pc) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0 + 1e-9);
  }
  // Strongest response on the step, not in the flat interior.
  EXPECT_GT(pc[20 * n + n / 2], pc[20 * n + n / 4]);
}

}  // namespace
}  // namespace dustbench
