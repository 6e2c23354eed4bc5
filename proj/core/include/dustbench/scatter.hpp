#pragma once

#include <array>

#include "dustbench/color.hpp"
#include "dustbench/image.hpp"

namespace dustbench {

// Degradation parameters of one synthesized image.
class ScatterParams {
 public:
  // Throws InvalidArgument unless 0 < beta <= 1.
  ScatterParams(ColorDeviation a_s, double beta);

  const ColorDeviation& a_s() const { return a_s_; }
  double beta() const { return beta_; }

  bool operator==(const ScatterParams&) const = default;

 private:
  ColorDeviation a_s_;
  double beta_;
};

// Per-pixel transmission t(x) in (0,1].
class TransmissionMap : public detail::Raster<1> {
 public:
  TransmissionMap() = default;
  // Throws InvalidArgument if a value lies outside (0,1].
  TransmissionMap(int width, int height, std::vector<double> data);

  static TransmissionMap filled(int width, int height, double value);
};

struct SynthesisResult {
  ImageRGB image;  // clamped to [0,1]
  std::array<double, 3> pre_clamp_min{};
  std::array<double, 3> pre_clamp_max{};
  double clip_fraction = 0.0;  // share of channel samples that were clamped
};

// t(x) = exp(-beta * d(x)). Any finite beta > 0 is accepted here so that
// deep-field behaviour can be studied; values that would underflow to zero
// are floored at the smallest positive normal double.
TransmissionMap transmission_map(const DepthMap& depth, double beta);

// J_c(x) = J_s(x) + A_s - 1, carried unclamped.
ColorField inherent_deviation(const ImageRGB& clear, const ColorDeviation& a_s);
ColorField inherent_deviation(const ImageRGB& clear, const Pixel& ambient);

// J_d(x) = J_c(x) * t(x), the same t for all three channels.
ColorField apply_transmission(const ColorField& deviation,
                              const TransmissionMap& t);

// Pre-clamp model output I_s(x) = [J_s(x) - (1 - A_s)] t(x) + A_s.
//
// Evaluated as J_s t + (A_s - (1 - A_s) t), which is algebraically identical
// and reproduces J_s bit-exactly when A_s = 0.5 and t = 1.
ColorField scatter_field(const ImageRGB& clear, const TransmissionMap& t,
                         const ColorDeviation& a_s);
// Same model with an arbitrary ambient color in [0,1]^3, not necessarily
// ordered (e.g. a neutral gray).
ColorField scatter_field(const ImageRGB& clear, const TransmissionMap& t,
                         const Pixel& ambient);

// Clamps a field to [0,1] and records extrema and the clipped share.
SynthesisResult clamp_with_stats(const ColorField& field);

SynthesisResult synthesize(const ImageRGB& clear, const TransmissionMap& t,
                           const ColorDeviation& a_s);
SynthesisResult synthesize(const ImageRGB& clear, const TransmissionMap& t,
                           const Pixel& ambient);
SynthesisResult synthesize(const ImageRGB& clear, const DepthMap& depth,
                           const ScatterParams& params);

}  // namespace dustbench
