#include "dustbench/image.hpp"

#include <cmath>

namespace dustbench {

namespace detail {

void check_dimensions(int width, int height) {
  if (width < 0 || height < 0) {
    throw InvalidArgument("image dimensions must be non-negative, got " +
                          std::to_string(width) + "x" + std::to_string(height));
  }
}

void check_sample_count(int width, int height, int channels, std::size_t n) {
  const auto expected = static_cast<std::size_t>(width) *
                        static_cast<std::size_t>(height) *
                        static_cast<std::size_t>(channels);
  if (n != expected) {
    throw InvalidArgument("expected " + std::to_string(expected) +
                          " samples, got " + std::to_string(n));
  }
}

}  // namespace detail

namespace {

void require_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InvalidArgument(std::string(what) +
                          " value outside [0,1]: " + std::to_string(v));
  }
}

}  // namespace

ImageRGB::ImageRGB(int width, int height) : Raster(width, height) {}

ImageRGB::ImageRGB(int width, int height, std::vector<double> data)
    : Raster(width, height, std::move(data)) {
  for (double v : data_) require_unit(v, "image");
}

ImageRGB ImageRGB::filled(int width, int height, const Pixel& value) {
  for (double v : value) require_unit(v, "image");
  ImageRGB out(width, height);
  for (std::size_t i = 0; i < out.data_.size(); i += 3) {
    out.data_[i] = value[0];
    out.data_[i + 1] = value[1];
    out.data_[i + 2] = value[2];
  }
  return out;
}

Pixel ImageRGB::pixel(int x, int y) const {
  const std::size_t i = index(x, y);
  return {data_[i], data_[i + 1], data_[i + 2]};
}

void ImageRGB::set_pixel(int x, int y, const Pixel& value) {
  for (double v : value) require_unit(v, "image");
  const std::size_t i = index(x, y);
  data_[i] = value[0];
  data_[i + 1] = value[1];
  data_[i + 2] = value[2];
}

void ImageRGB::set(int x, int y, int c, double value) {
  require_unit(value, "image");
  data_[index(x, y, c)] = value;
}

ColorField::ColorField(const ImageRGB& image)
    : Raster(image.width(), image.height(),
             std::vector<double>(image.data().begin(), image.data().end())) {}

Pixel ColorField::pixel(int x, int y) const {
  const std::size_t i = index(x, y);
  return {data_[i], data_[i + 1], data_[i + 2]};
}

Pixel ImageLAB::pixel(int x, int y) const {
  const std::size_t i = index(x, y);
  return {data_[i], data_[i + 1], data_[i + 2]};
}

DepthMap::DepthMap(int width, int height) : Raster(width, height) {}

DepthMap::DepthMap(int width, int height, std::vector<double> data)
    : Raster(width, height, std::move(data)) {
  for (double v : data_) require_unit(v, "depth");
}

DepthMap DepthMap::filled(int width, int height, double value) {
  require_unit(value, "depth");
  return DepthMap(width, height,
                  std::vector<double>(static_cast<std::size_t>(width) *
                                          static_cast<std::size_t>(height),
                                      value));
}

}  // namespace dustbench
