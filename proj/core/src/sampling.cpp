#include "dustbench/sampling.hpp"

#include <algorithm>
#include <cctype>

#include "dustbench/random.hpp"

namespace dustbench {

IntensityClass IntensityClass::standard(Intensity tag) {
  switch (tag) {
    case Intensity::kLight:
      return {tag, {0.3, 0.4}};
    case Intensity::kMedium:
      return {tag, {0.4, 0.5}};
    case Intensity::kDense:
      return {tag, {0.5, 0.6}};
    case Intensity::kHybrid:
      return {tag, {0.3, 0.6}};
  }
  throw InvalidArgument("unknown intensity class");
}

IntensityClass IntensityClass::with_range(Intensity tag, BetaRange range) {
  if (!(range.lo > 0.0 && range.lo <= range.hi && range.hi <= 1.0)) {
    throw InvalidArgument("beta range must satisfy 0 < lo <= hi <= 1");
  }
  return {tag, range};
}

std::string to_string(Intensity tag) {
  switch (tag) {
    case Intensity::kLight:
      return "light";
    case Intensity::kMedium:
      return "medium";
    case Intensity::kDense:
      return "dense";
    case Intensity::kHybrid:
      return "hybrid";
  }
  return "unknown";
}

Intensity parse_intensity(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "light" || lower == "l") return Intensity::kLight;
  if (lower == "medium" || lower == "m") return Intensity::kMedium;
  if (lower == "dense" || lower == "d") return Intensity::kDense;
  if (lower == "hybrid" || lower == "h") return Intensity::kHybrid;
  throw InvalidArgument("unknown intensity class '" + std::string(name) + "'");
}

ScatterParams sample_params(std::uint64_t seed, const IntensityClass& cls,
                            const Palette& palette) {
  if (palette.empty()) throw InvalidArgument("palette is empty");
  Rng rng(seed);
  const double beta = rng.uniform(cls.beta_range.lo, cls.beta_range.hi);
  const ColorDeviation& a_s = palette[rng.index(palette.size())];
  return ScatterParams(a_s, beta);
}

}  // namespace dustbench
