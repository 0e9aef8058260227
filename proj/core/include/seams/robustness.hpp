#pragma once

#include <span>
#include <utility>
#include <vector>

#include "seams/contrast.hpp"
#include "seams/image.hpp"

namespace seams {

// Per-channel multipliers simulating a light source of the given color
// temperature: the black-body RGB at `kelvin` divided by 255.
struct TemperatureFactor {
    double kelvin = 0.0;
    double factor_r = 1.0;
    double factor_g = 1.0;
    double factor_b = 1.0;
};

// Black-body color lookup from an embedded table spanning 1000-10000 K at
// 100 K resolution, linearly interpolated between rows (exact on rows).
// Throws OutOfRange outside [1000, 10000].
Srgb8 blackbody_rgb(double kelvin);

TemperatureFactor temperature_factor(double kelvin);

// Multiplies each sRGB channel by its black-body factor, rounds to nearest
// and clamps; operates in gamma-encoded sRGB, before any Lab conversion.
SrgbImage apply_temperature(const SrgbImage& img, double kelvin);

// Catmull-Rom bicubic resampling (kernel parameter a = -0.5), separable with
// a double-precision intermediate, edge-clamped taps, in gamma-encoded sRGB.
// `target` is the new length of the longer side; the short side scales to
// preserve aspect ratio (rounded, floor 1). Throws InvalidTarget for
// target < 2.
SrgbImage resize_bicubic(const SrgbImage& img, int target);

// Decode-once sweeps behind Fig.-3-style stability plots.
std::vector<std::pair<double, DistanceStats>> temperature_sweep(const SrgbImage& img,
                                                                std::span<const double> kelvins);
std::vector<std::pair<int, DistanceStats>> size_sweep(const SrgbImage& img,
                                                      std::span<const int> widths);

// Sweep grids used by the CLI when none are given: 1500..10000 K in 850 K
// steps; widths 100..1500 in steps of 100.
std::vector<double> default_temperature_grid();
std::vector<int> default_width_grid();

}  // namespace seams
