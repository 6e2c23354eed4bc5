#include "dustbench/color.hpp"

#include <cmath>
#include <cstdio>

namespace dustbench {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

double srgb_to_linear(double v) {
  return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

// sRGB primaries, D65 white.
constexpr double kRgbToXyz[3][3] = {
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
};

// The reference white is the image of RGB (1,1,1), so the gray axis maps to
// a = b = 0 exactly.
constexpr double kWhite[3] = {
    kRgbToXyz[0][0] + kRgbToXyz[0][1] + kRgbToXyz[0][2],
    kRgbToXyz[1][0] + kRgbToXyz[1][1] + kRgbToXyz[1][2],
    kRgbToXyz[2][0] + kRgbToXyz[2][1] + kRgbToXyz[2][2],
};

double lab_f(double t) {
  constexpr double kEpsilon = 216.0 / 24389.0;
  constexpr double kKappa = 24389.0 / 27.0;
  return t > kEpsilon ? std::cbrt(t) : (kKappa * t + 16.0) / 116.0;
}

}  // namespace

ColorDeviation::ColorDeviation(double r, double g, double b) : rgb_{r, g, b} {
  for (double v : rgb_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InvalidArgument("color deviation channel outside [0,1]");
    }
  }
  if (!(r > g && g > b)) {
    throw InvalidArgument("color deviation must satisfy r > g > b, got (" +
                          std::to_string(r) + ", " + std::to_string(g) + ", " +
                          std::to_string(b) + ")");
  }
}

std::string ColorDeviation::hex() const {
  char buf[8];
  const auto byte = [](double v) {
    return static_cast<unsigned>(std::floor(v * 255.0 + 0.5));
  };
  std::snprintf(buf, sizeof(buf), "#%02X%02X%02X", byte(rgb_[0]), byte(rgb_[1]),
                byte(rgb_[2]));
  return buf;
}

ColorDeviation parse_hex(std::string_view code) {
  if (code.size() != 7 || code[0] != '#') {
    throw InvalidArgument("malformed hex color '" + std::string(code) +
                          "', expected #RRGGBB");
  }
  double channels[3];
  for (int c = 0; c < 3; ++c) {
    const int hi = hex_digit(code[1 + 2 * c]);
    const int lo = hex_digit(code[2 + 2 * c]);
    if (hi < 0 || lo < 0) {
      throw InvalidArgument("malformed hex color '" + std::string(code) + "'");
    }
    channels[c] = (hi * 16 + lo) / 255.0;
  }
  return ColorDeviation(channels[0], channels[1], channels[2]);
}

Lab srgb_to_lab(const Pixel& rgb) {
  const double lin[3] = {srgb_to_linear(rgb[0]), srgb_to_linear(rgb[1]),
                         srgb_to_linear(rgb[2])};
  double f[3];
  for (int i = 0; i < 3; ++i) {
    const double xyz = kRgbToXyz[i][0] * lin[0] + kRgbToXyz[i][1] * lin[1] +
                       kRgbToXyz[i][2] * lin[2];
    f[i] = lab_f(xyz / kWhite[i]);
  }
  return {116.0 * f[1] - 16.0, 500.0 * (f[0] - f[1]), 200.0 * (f[1] - f[2])};
}

ImageLAB rgb_to_lab(const ImageRGB& image) {
  ImageLAB out(image.width(), image.height());
  auto dst = out.mutable_data();
  const auto src = image.data();
  for (std::size_t i = 0; i < src.size(); i += 3) {
    const Lab lab = srgb_to_lab({src[i], src[i + 1], src[i + 2]});
    dst[i] = lab.l;
    dst[i + 1] = lab.a;
    dst[i + 2] = lab.b;
  }
  return out;
}

}  // namespace dustbench
