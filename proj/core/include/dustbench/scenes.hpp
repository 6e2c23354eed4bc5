#pragma once

#include <cstdint>

#include "dustbench/image.hpp"

namespace dustbench {

struct Scene {
  ImageRGB clear;
  DepthMap depth;
};

// Procedural outdoor scene: sky over a textured ground plane with a handful
// of colored objects, and the matching depth (sky farthest, ground receding
// toward the horizon). Channel means are gray-world balanced so the clear
// image carries no global color cast. Deterministic for a given seed.
Scene make_outdoor_scene(int width, int height, std::uint64_t seed);

// Seeded noise-plus-gradient image with a linear depth ramp, used for timing.
Scene make_gradient_scene(int width, int height, std::uint64_t seed);

}  // namespace dustbench
