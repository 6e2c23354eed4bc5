#pragma once

#include <string>
#include <string_view>

#include "dustbench/color.hpp"
#include "dustbench/image.hpp"

namespace dustbench {

enum class DeltaEFormula { kCie94, kCiede2000 };

// CIE94 with graphic-arts constants (kL = kC = kH = 1, K1 = 0.045,
// K2 = 0.015). The chroma weights use the reference color, so the formula is
// not symmetric.
double delta_e_cie94(const Lab& reference, const Lab& sample);

// CIEDE2000 including the blue-region rotation term. Symmetric.
double delta_e_ciede2000(const Lab& reference, const Lab& sample);

// Mean per-pixel color difference between two images in CIELAB, with `ref`
// as the reference color of every pair.
double color_difference(const ImageRGB& test, const ImageRGB& ref,
                        DeltaEFormula formula);

}  // namespace dustbench
