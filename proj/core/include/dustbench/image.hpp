#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dustbench/error.hpp"

namespace dustbench {

using Pixel = std::array<double, 3>;

namespace detail {

void check_dimensions(int width, int height);
void check_sample_count(int width, int height, int channels, std::size_t n);

// Row-major interleaved storage shared by every raster type.
template <int Channels>
class Raster {
 public:
  static constexpr int kChannels = Channels;

  Raster() = default;
  Raster(int width, int height)
      : width_(width), height_(height) {
    check_dimensions(width, height);
    data_.assign(sample_count(), 0.0);
  }
  Raster(int width, int height, std::vector<double> data)
      : width_(width), height_(height), data_(std::move(data)) {
    check_dimensions(width, height);
    check_sample_count(width, height, Channels, data_.size());
  }

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return width_ == 0 || height_ == 0; }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }
  std::size_t sample_count() const { return pixel_count() * Channels; }

  std::span<const double> data() const { return data_; }

  std::size_t index(int x, int y, int c = 0) const {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)) *
               Channels +
           static_cast<std::size_t>(c);
  }
  double at(int x, int y, int c = 0) const { return data_[index(x, y, c)]; }

  template <int Other>
  bool same_shape(const Raster<Other>& other) const {
    return width_ == other.width() && height_ == other.height();
  }

  bool operator==(const Raster&) const = default;

 protected:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

}  // namespace detail

// Normalized sRGB image. Every stored channel value is finite and in [0,1].
class ImageRGB : public detail::Raster<3> {
 public:
  ImageRGB() = default;
  ImageRGB(int width, int height);
  ImageRGB(int width, int height, std::vector<double> data);

  static ImageRGB filled(int width, int height, const Pixel& value);

  Pixel pixel(int x, int y) const;
  void set_pixel(int x, int y, const Pixel& value);
  void set(int x, int y, int c, double value);
};

// Unconstrained three-channel buffer carrying intermediate values that may
// leave [0,1] (the inherent-deviation and attenuated fields).
class ColorField : public detail::Raster<3> {
 public:
  using Raster::Raster;
  explicit ColorField(const ImageRGB& image);

  std::span<double> mutable_data() { return data_; }
  double& at(int x, int y, int c) { return data_[index(x, y, c)]; }
  using Raster::at;
  Pixel pixel(int x, int y) const;
};

// CIELAB image, channels (L, a, b).
class ImageLAB : public detail::Raster<3> {
 public:
  using Raster::Raster;

  std::span<double> mutable_data() { return data_; }
  Pixel pixel(int x, int y) const;
};

// Normalized scene depth, every value finite and in [0,1].
class DepthMap : public detail::Raster<1> {
 public:
  DepthMap() = default;
  DepthMap(int width, int height);
  DepthMap(int width, int height, std::vector<double> data);

  static DepthMap filled(int width, int height, double value);
};

// Throws DimensionMismatch unless `a` and `b` share width and height.
template <int A, int B>
void require_same_shape(const detail::Raster<A>& a, const detail::Raster<B>& b,
                        const std::string& what) {
  if (!a.same_shape(b)) {
    throw DimensionMismatch(what, a.width(), a.height(), b.width(), b.height());
  }
}

}  // namespace dustbench
