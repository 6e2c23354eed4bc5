#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dustbench/color.hpp"

namespace dustbench {

using Palette = std::vector<ColorDeviation>;

// The 21 global color deviations measured in the deepest-field region of
// real sandstorm photographs, brightest first.
const std::vector<std::string>& default_palette_hex();
Palette default_palette();

// Parses each code with parse_hex; the first invalid entry throws.
Palette palette_from_hex(const std::vector<std::string>& codes);
std::vector<std::string> palette_to_hex(const Palette& palette);

// Reads a JSON file holding either an array of "#RRGGBB" strings or an
// object with a "palette" array.
Palette load_palette(const std::filesystem::path& path);

bool palette_contains(const Palette& palette, const ColorDeviation& color);

}  // namespace dustbench
