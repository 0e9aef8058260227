#pragma once

#include <filesystem>

#include "seams/image.hpp"

namespace seams {

// Decodes a PNG or JPEG file (sniffed by magic bytes) into 8-bit sRGB.
// Deterministic normalization rules:
//   - alpha is composited over opaque white
//   - grayscale and palette images are expanded to 8-bit RGB
//   - 16-bit PNG channels are reduced to their high byte
//   - embedded ICC profiles are ignored; everything is treated as sRGB
// Throws DecodeError for unreadable/unsupported files and for images larger
// than 2^26 pixels.
SrgbImage decode_image(const std::filesystem::path& path);

// 8-bit RGB PNG writer for generated fixtures.
void write_png(const std::filesystem::path& path, const SrgbImage& img);

}  // namespace seams
