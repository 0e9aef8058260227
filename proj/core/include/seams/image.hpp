#pragma once

#include <cstddef>
#include <vector>

#include "seams/colorspace.hpp"

namespace seams {

// Row-major pixel grids. Width/height are guaranteed positive and
// width*height bounded (the decoder enforces <= 2^26 pixels).
template <typename Pixel>
struct ImageGrid {
    int width = 0;
    int height = 0;
    std::vector<Pixel> pixels;

    ImageGrid() = default;
    ImageGrid(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h) {}

    Pixel& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    const Pixel& at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

    std::size_t pixel_count() const { return pixels.size(); }
};

using SrgbImage = ImageGrid<Srgb8>;
using LabImage = ImageGrid<LabColor>;

LabImage to_lab(const SrgbImage& img);

LabImage rotate90(const LabImage& img);  // clockwise
LabImage flip_horizontal(const LabImage& img);
LabImage flip_vertical(const LabImage& img);

}  // namespace seams
