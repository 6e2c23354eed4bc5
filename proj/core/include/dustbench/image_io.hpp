#pragma once

#include <cstdint>
#include <filesystem>

#include "dustbench/image.hpp"

namespace dustbench {

// Reads a PNG (8 or 16 bit, any color type) or PPM (P3/P6) file. The format
// is detected from the file's magic bytes. Samples map to [0,1] by
// v / maxval (255 for 8-bit data, 65535 for 16-bit data). Grayscale sources
// are replicated across the three channels; alpha is discarded.
//
// Throws IoError whose kind() distinguishes a missing file, an unsupported
// format, a corrupt header and truncated or corrupt pixel data.
ImageRGB load_image(const std::filesystem::path& path);

// Writes an 8-bit image. The format follows the extension: ".png" or ".ppm"
// (binary P6). Each channel is quantized as floor(v * 255 + 0.5).
void save_image(const ImageRGB& image, const std::filesystem::path& path);

// Reads a grayscale PNG (8 or 16 bit) or a single-channel PFM ("Pf") depth
// map. With `normalize` set, values are rescaled so the minimum maps to 0 and
// the maximum to 1; a constant map becomes all zeros. Without it, PNG samples
// map by v / maxval and PFM samples must already lie in [0,1].
DepthMap load_depth(const std::filesystem::path& path, bool normalize);

// Writes a depth map as a 16-bit grayscale PNG or a little-endian PFM,
// chosen by extension.
void save_depth(const DepthMap& depth, const std::filesystem::path& path);

// round-half-up quantization used by every 8-bit writer.
std::uint8_t quantize_8bit(double v);

}  // namespace dustbench
