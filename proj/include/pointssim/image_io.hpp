#pragma once

#include <string>

#include "pointssim/image.hpp"

namespace pointssim {

enum class ImageFormat {
    Auto,       // by extension: .png -> Png, anything else -> PgmBinary
    PgmAscii,   // portable graymap P2
    PgmBinary,  // portable graymap P5
    Png,        // 8-bit grayscale PNG
};

/// Reads a PGM (P2/P5) or grayscale PNG file; any nonzero pixel becomes 1.
BinaryImage load_image(const std::string& path);

/// Writes the image losslessly. Graymaps use maxval 1; PNG uses 0/255 so the
/// mask is visible in viewers. load_image(save_image(x)) == x in all formats.
void save_image(const BinaryImage& img, const std::string& path,
                ImageFormat format = ImageFormat::Auto);

}  // namespace pointssim
