#pragma once

#include "dustbench/image.hpp"

namespace dustbench {

// No-reference sharpness and information scores on the BT.601 luma plane
// scaled to 0-255. Borders are excluded rather than padded.
struct NoReferenceScores {
  double average_gradient = 0.0;  // AG
  double edge_intensity = 0.0;    // EI
  double entropy = 0.0;           // IE, bits
};

// AG: mean of sqrt((dx^2 + dy^2) / 2) with forward differences, over pixels
//     whose right and lower neighbours exist.
// EI: mean 3x3 Sobel magnitude over pixels with a full 3x3 neighbourhood.
// IE: Shannon entropy of the 256-bin histogram of round(luma).
// Throws InvalidArgument if either dimension is below 3.
NoReferenceScores simple_nr_metrics(const ImageRGB& image);

}  // namespace dustbench
