#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dustbench/palette.hpp"
#include "dustbench/scatter.hpp"

namespace dustbench {

enum class Intensity { kLight, kMedium, kDense, kHybrid };

struct BetaRange {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double beta) const { return beta >= lo && beta <= hi; }
  bool operator==(const BetaRange&) const = default;
};

// A dust-density class and the closed beta interval it draws from.
struct IntensityClass {
  Intensity tag = Intensity::kHybrid;
  BetaRange beta_range;

  // Standard ranges: light [0.3,0.4], medium [0.4,0.5], dense [0.5,0.6],
  // hybrid [0.3,0.6].
  static IntensityClass standard(Intensity tag);
  // Custom range; throws InvalidArgument unless 0 < lo <= hi <= 1.
  static IntensityClass with_range(Intensity tag, BetaRange range);
};

std::string to_string(Intensity tag);
// Accepts "light"/"medium"/"dense"/"hybrid" or "L"/"M"/"D"/"H", any case.
Intensity parse_intensity(std::string_view name);

// Draws beta uniformly from the class range, then A_s uniformly from the
// palette. The same seed always yields the same parameters.
ScatterParams sample_params(std::uint64_t seed, const IntensityClass& cls,
                            const Palette& palette);

}  // namespace dustbench
