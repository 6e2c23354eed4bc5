#include "dustbench/scenes.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "dustbench/random.hpp"

namespace dustbench {

namespace {

// Bilinearly interpolated lattice noise in [-1,1] with `cells` cells across.
class ValueNoise {
 public:
  ValueNoise(int cells, Rng& rng) : cells_(cells) {
    lattice_.resize(static_cast<std::size_t>(cells + 1) * (cells + 1));
    for (double& v : lattice_) v = 2.0 * rng.uniform() - 1.0;
  }

  double at(double u, double v) const {
    const double x = std::clamp(u, 0.0, 1.0) * cells_;
    const double y = std::clamp(v, 0.0, 1.0) * cells_;
    const int x0 = std::min(static_cast<int>(x), cells_ - 1);
    const int y0 = std::min(static_cast<int>(y), cells_ - 1);
    const double fx = smooth(x - x0);
    const double fy = smooth(y - y0);
    const auto l = [&](int i, int j) {
      return lattice_[static_cast<std::size_t>(j) * (cells_ + 1) + i];
    };
    const double top = l(x0, y0) * (1 - fx) + l(x0 + 1, y0) * fx;
    const double bottom = l(x0, y0 + 1) * (1 - fx) + l(x0 + 1, y0 + 1) * fx;
    return top * (1 - fy) + bottom * fy;
  }

 private:
  static double smooth(double t) { return t * t * (3.0 - 2.0 * t); }

  int cells_;
  std::vector<double> lattice_;
};

Pixel mix(const Pixel& a, const Pixel& b, double t) {
  return {a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t,
          a[2] + (b[2] - a[2]) * t};
}

struct Box {
  int x0, x1, y0, y1;
  Pixel color;
  double depth;
};

void gray_world_balance(std::vector<double>& rgb) {
  std::array<double, 3> mean{};
  const std::size_t n = rgb.size() / 3;
  for (std::size_t i = 0; i < rgb.size(); ++i) mean[i % 3] += rgb[i];
  for (double& m : mean) m /= static_cast<double>(n);
  const double gray = (mean[0] + mean[1] + mean[2]) / 3.0;
  for (std::size_t i = 0; i < rgb.size(); ++i) {
    const double m = mean[i % 3];
    rgb[i] = std::clamp(m > 0.0 ? rgb[i] * gray / m : gray, 0.0, 1.0);
  }
}

}  // namespace

Scene make_outdoor_scene(int width, int height, std::uint64_t seed) {
  if (width < 8 || height < 8) {
    throw InvalidArgument("outdoor scene needs at least 8x8 pixels");
  }
  Rng rng(seed);
  const ValueNoise coarse(6, rng);
  const ValueNoise fine(24, rng);

  const int horizon = static_cast<int>(height * rng.uniform(0.30, 0.50));
  const Pixel sky_top = {rng.uniform(0.45, 0.55), rng.uniform(0.58, 0.68),
                         rng.uniform(0.76, 0.86)};
  const Pixel sky_low = {rng.uniform(0.65, 0.80), rng.uniform(0.72, 0.85),
                         rng.uniform(0.82, 0.95)};
  const std::array<Pixel, 3> grounds = {Pixel{0.36, 0.46, 0.32},
                                        Pixel{0.48, 0.45, 0.42},
                                        Pixel{0.40, 0.43, 0.38}};
  const Pixel ground_near = grounds[rng.index(grounds.size())];
  const Pixel ground_far = mix(ground_near, sky_low, 0.35);

  std::vector<Box> boxes;
  const int n_boxes = 3 + static_cast<int>(rng.index(4));
  for (int b = 0; b < n_boxes; ++b) {
    const int base = horizon + static_cast<int>(rng.uniform(0.05, 0.85) * (height - horizon));
    const int bh = static_cast<int>(rng.uniform(0.10, 0.35) * height);
    const int bw = static_cast<int>(rng.uniform(0.06, 0.22) * width);
    const int x0 = static_cast<int>(rng.uniform(0.0, 1.0) * (width - bw));
    const double hue = rng.uniform(0.0, 1.0);
    // Saturated color on a rough hue circle.
    const Pixel color = {0.5 + 0.35 * std::cos(2 * M_PI * hue),
                         0.5 + 0.35 * std::cos(2 * M_PI * (hue - 1.0 / 3)),
                         0.5 + 0.35 * std::cos(2 * M_PI * (hue - 2.0 / 3))};
    const double d = 1.0 - static_cast<double>(base - horizon) /
                               std::max(1, height - 1 - horizon);
    boxes.push_back({x0, x0 + bw, std::max(0, base - bh), base, color,
                     std::clamp(d, 0.0, 1.0)});
  }
  // Nearer objects drawn last.
  std::sort(boxes.begin(), boxes.end(),
            [](const Box& a, const Box& b) { return a.depth > b.depth; });

  std::vector<double> rgb(static_cast<std::size_t>(width) * height * 3);
  std::vector<double> depth(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double u = static_cast<double>(x) / (width - 1);
      const double v = static_cast<double>(y) / (height - 1);
      Pixel c;
      double d;
      if (y < horizon) {
        c = mix(sky_top, sky_low, static_cast<double>(y) / std::max(1, horizon));
        const double cloud = std::max(0.0, coarse.at(u, v));
        c = mix(c, Pixel{0.92, 0.92, 0.94}, 0.6 * cloud);
        d = 1.0;
      } else {
        const double g = static_cast<double>(y - horizon) /
                         std::max(1, height - 1 - horizon);
        c = mix(ground_far, ground_near, g);
        const double tex = 0.10 * fine.at(u, v) + 0.06 * coarse.at(v, u);
        c = {c[0] + tex, c[1] + tex, c[2] + tex};
        d = 1.0 - g;
      }
      for (const Box& b : boxes) {
        if (x >= b.x0 && x < b.x1 && y >= b.y0 && y < b.y1) {
          const double shade = 0.85 + 0.15 * fine.at(v, u);
          c = {b.color[0] * shade, b.color[1] * shade, b.color[2] * shade};
          d = b.depth;
        }
      }
      const double grain = 0.02 * rng.normal();
      const std::size_t p = static_cast<std::size_t>(y) * width + x;
      for (int k = 0; k < 3; ++k) {
        rgb[3 * p + static_cast<std::size_t>(k)] =
            std::clamp(c[static_cast<std::size_t>(k)] + grain, 0.0, 1.0);
      }
      depth[p] = d;
    }
  }
  gray_world_balance(rgb);
  return {ImageRGB(width, height, std::move(rgb)),
          DepthMap(width, height, std::move(depth))};
}

Scene make_gradient_scene(int width, int height, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> rgb(static_cast<std::size_t>(width) * height * 3);
  std::vector<double> depth(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double u = width > 1 ? static_cast<double>(x) / (width - 1) : 0.0;
      const double v = height > 1 ? static_cast<double>(y) / (height - 1) : 0.0;
      const std::size_t p = static_cast<std::size_t>(y) * width + x;
      const Pixel base = {0.2 + 0.6 * u, 0.2 + 0.6 * v, 0.8 - 0.6 * u};
      for (int k = 0; k < 3; ++k) {
        rgb[3 * p + static_cast<std::size_t>(k)] =
            std::clamp(base[static_cast<std::size_t>(k)] + 0.1 * (rng.uniform() - 0.5),
                       0.0, 1.0);
      }
      depth[p] = 1.0 - v;
    }
  }
  return {ImageRGB(width, height, std::move(rgb)),
          DepthMap(width, height, std::move(depth))};
}

}  // namespace dustbench
