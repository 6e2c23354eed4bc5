#include "dustbench/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dustbench {

ScatterParams::ScatterParams(ColorDeviation a_s, double beta)
    : a_s_(a_s), beta_(beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw InvalidArgument("beta must satisfy 0 < beta <= 1, got " +
                          std::to_string(beta));
  }
}

TransmissionMap::TransmissionMap(int width, int height, std::vector<double> data)
    : Raster(width, height, std::move(data)) {
  for (double v : data_) {
    if (!(v > 0.0 && v <= 1.0)) {
      throw InvalidArgument("transmission outside (0,1]: " + std::to_string(v));
    }
  }
}

TransmissionMap TransmissionMap::filled(int width, int height, double value) {
  return TransmissionMap(
      width, height,
      std::vector<double>(
          static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
          value));
}

namespace {

void check_ambient(const Pixel& a) {
  for (double v : a) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InvalidArgument("ambient channel outside [0,1]: " + std::to_string(v));
    }
  }
}

}  // namespace

TransmissionMap transmission_map(const DepthMap& depth, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("beta must be finite and > 0, got " +
                          std::to_string(beta));
  }
  std::vector<double> t(depth.pixel_count());
  const auto d = depth.data();
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = std::max(std::exp(-beta * d[i]), std::numeric_limits<double>::min());
  }
  return TransmissionMap(depth.width(), depth.height(), std::move(t));
}

ColorField inherent_deviation(const ImageRGB& clear, const ColorDeviation& a_s) {
  return inherent_deviation(clear, a_s.rgb());
}

ColorField inherent_deviation(const ImageRGB& clear, const Pixel& a) {
  check_ambient(a);
  ColorField out(clear.width(), clear.height());
  auto dst = out.mutable_data();
  const auto src = clear.data();
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i] = src[i] + a[i % 3] - 1.0;
  }
  return out;
}

ColorField apply_transmission(const ColorField& deviation,
                              const TransmissionMap& t) {
  require_same_shape(deviation, t, "deviation field and transmission map");
  ColorField out = deviation;
  auto dst = out.mutable_data();
  const auto tv = t.data();
  for (std::size_t p = 0; p < tv.size(); ++p) {
    dst[3 * p] *= tv[p];
    dst[3 * p + 1] *= tv[p];
    dst[3 * p + 2] *= tv[p];
  }
  return out;
}

ColorField scatter_field(const ImageRGB& clear, const TransmissionMap& t,
                         const ColorDeviation& a_s) {
  return scatter_field(clear, t, a_s.rgb());
}

ColorField scatter_field(const ImageRGB& clear, const TransmissionMap& t,
                         const Pixel& a) {
  check_ambient(a);
  require_same_shape(clear, t, "clear image and transmission map");
  ColorField out(clear.width(), clear.height());
  auto dst = out.mutable_data();
  const auto src = clear.data();
  const auto tv = t.data();
  const Pixel complement = {1.0 - a[0], 1.0 - a[1], 1.0 - a[2]};
  for (std::size_t p = 0; p < tv.size(); ++p) {
    for (int c = 0; c < 3; ++c) {
      const std::size_t i = 3 * p + static_cast<std::size_t>(c);
      dst[i] = src[i] * tv[p] + (a[c] - complement[c] * tv[p]);
    }
  }
  return out;
}

SynthesisResult clamp_with_stats(const ColorField& field) {
  SynthesisResult result;
  result.pre_clamp_min.fill(std::numeric_limits<double>::infinity());
  result.pre_clamp_max.fill(-std::numeric_limits<double>::infinity());
  const auto src = field.data();
  std::vector<double> clamped(src.size());
  std::size_t clipped = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const double v = src[i];
    const std::size_t c = i % 3;
    result.pre_clamp_min[c] = std::min(result.pre_clamp_min[c], v);
    result.pre_clamp_max[c] = std::max(result.pre_clamp_max[c], v);
    if (v < 0.0 || v > 1.0) ++clipped;
    clamped[i] = std::clamp(v, 0.0, 1.0);
  }
  result.clip_fraction =
      src.empty() ? 0.0
                  : static_cast<double>(clipped) / static_cast<double>(src.size());
  result.image = ImageRGB(field.width(), field.height(), std::move(clamped));
  return result;
}

SynthesisResult synthesize(const ImageRGB& clear, const TransmissionMap& t,
                           const ColorDeviation& a_s) {
  return clamp_with_stats(scatter_field(clear, t, a_s));
}

SynthesisResult synthesize(const ImageRGB& clear, const TransmissionMap& t,
                           const Pixel& ambient) {
  return clamp_with_stats(scatter_field(clear, t, ambient));
}

SynthesisResult synthesize(const ImageRGB& clear, const DepthMap& depth,
                           const ScatterParams& params) {
  require_same_shape(clear, depth, "clear image and depth map");
  return synthesize(clear, transmission_map(depth, params.beta()), params.a_s());
}

}  // namespace dustbench
