#include "dustbench/metrics.hpp"

#include <cmath>

#include "dustbench/color.hpp"

namespace dustbench {

namespace {

std::vector<double> luma_plane(const ImageRGB& image) {
  std::vector<double> out(image.pixel_count());
  const auto d = image.data();
  for (std::size_t p = 0; p < out.size(); ++p) {
    out[p] = luma({d[3 * p], d[3 * p + 1], d[3 * p + 2]});
  }
  return out;
}

// Valid-mode separable correlation: output is (w - n + 1) x (h - n + 1).
std::vector<double> filter_valid(const std::vector<double>& src, int w, int h,
                                 const std::vector<double>& taps) {
  const int n = static_cast<int>(taps.size());
  const int ow = w - n + 1;
  const int oh = h - n + 1;
  std::vector<double> rows(static_cast<std::size_t>(ow) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) {
        acc += taps[static_cast<std::size_t>(k)] *
               src[static_cast<std::size_t>(y) * w + x + k];
      }
      rows[static_cast<std::size_t>(y) * ow + x] = acc;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(ow) * oh);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) {
        acc += taps[static_cast<std::size_t>(k)] *
               rows[static_cast<std::size_t>(y + k) * ow + x];
      }
      out[static_cast<std::size_t>(y) * ow + x] = acc;
    }
  }
  return out;
}

}  // namespace

double mse(const ImageRGB& test, const ImageRGB& ref) {
  require_same_shape(test, ref, "mse");
  const auto a = test.data();
  const auto b = ref.data();
  if (a.empty()) throw InvalidArgument("mse of empty images");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = 255.0 * (a[i] - b[i]);
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

double psnr(const ImageRGB& test, const ImageRGB& ref) {
  const double e = mse(test, ref);
  if (e == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / e);
}

void SsimConfig::validate() const {
  if (window < 1 || window % 2 == 0) {
    throw InvalidArgument("SSIM window must be a positive odd size");
  }
  if (!(sigma > 0.0)) throw InvalidArgument("SSIM sigma must be positive");
  if (!(c1() > 0.0) || !(c2() > 0.0)) {
    throw InvalidArgument("SSIM stabilizers must be positive");
  }
}

std::vector<double> gaussian_taps(int window, double sigma) {
  std::vector<double> taps(static_cast<std::size_t>(window));
  const int r = window / 2;
  double sum = 0.0;
  for (int i = 0; i < window; ++i) {
    const double x = i - r;
    taps[static_cast<std::size_t>(i)] = std::exp(-x * x / (2.0 * sigma * sigma));
    sum += taps[static_cast<std::size_t>(i)];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

double ssim(const ImageRGB& test, const ImageRGB& ref, const SsimConfig& cfg) {
  require_same_shape(test, ref, "ssim");
  cfg.validate();
  const int w = test.width();
  const int h = test.height();
  if (w < cfg.window || h < cfg.window) {
    throw InvalidArgument("image " + std::to_string(w) + "x" +
                          std::to_string(h) + " is smaller than the " +
                          std::to_string(cfg.window) + "-pixel SSIM window");
  }
  const std::vector<double> x = luma_plane(test);
  const std::vector<double> y = luma_plane(ref);
  std::vector<double> xx(x.size()), yy(x.size()), xy(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    xx[i] = x[i] * x[i];
    yy[i] = y[i] * y[i];
    xy[i] = x[i] * y[i];
  }
  const auto taps = gaussian_taps(cfg.window, cfg.sigma);
  const auto mu_x = filter_valid(x, w, h, taps);
  const auto mu_y = filter_valid(y, w, h, taps);
  const auto e_xx = filter_valid(xx, w, h, taps);
  const auto e_yy = filter_valid(yy, w, h, taps);
  const auto e_xy = filter_valid(xy, w, h, taps);

  const double c1 = cfg.c1();
  const double c2 = cfg.c2();
  double sum = 0.0;
  for (std::size_t i = 0; i < mu_x.size(); ++i) {
    const double mx = mu_x[i];
    const double my = mu_y[i];
    const double vx = e_xx[i] - mx * mx;
    const double vy = e_yy[i] - my * my;
    const double cov = e_xy[i] - mx * my;
    sum += ((2.0 * mx * my + c1) * (2.0 * cov + c2)) /
           ((mx * mx + my * my + c1) * (vx + vy + c2));
  }
  return sum / static_cast<double>(mu_x.size());
}

}  // namespace dustbench
