#include "seams/image.hpp"

namespace seams {

LabImage to_lab(const SrgbImage& img) {
    LabImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        out.pixels[i] = srgb_to_lab(img.pixels[i]);
    }
    return out;
}

LabImage rotate90(const LabImage& img) {
    LabImage out(img.height, img.width);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            out.at(img.height - 1 - y, x) = img.at(x, y);
        }
    }
    return out;
}

LabImage flip_horizontal(const LabImage& img) {
    LabImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            out.at(img.width - 1 - x, y) = img.at(x, y);
        }
    }
    return out;
}

LabImage flip_vertical(const LabImage& img) {
    LabImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            out.at(x, img.height - 1 - y) = img.at(x, y);
        }
    }
    return out;
}

}  // namespace seams
