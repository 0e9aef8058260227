#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seams/contrast.hpp"
#include "seams/image.hpp"

namespace seams {

// The two randomized baselines: ShufflePixels relocates the original pixels
// uniformly at random (color multiset preserved exactly); UniformRgb replaces
// every pixel with an independent uniform draw from the 256^3 sRGB cube.
enum class NullModelKind { ShufflePixels, UniformRgb };

const char* to_string(NullModelKind kind);

// Uniformly random permutation of the pixel grid, Fisher-Yates driven by
// `seed`. Same dimensions, exactly the same color multiset. The sRGB
// overload applies the identical permutation for a given seed, so shuffling
// commutes exactly with any pointwise pixel map.
LabImage shuffle_pixels(const LabImage& img, std::uint64_t seed);
SrgbImage shuffle_pixels(const SrgbImage& img, std::uint64_t seed);

// width x height of i.i.d. uniform draws from the 256^3 sRGB cube.
SrgbImage uniform_rgb_srgb(int width, int height, std::uint64_t seed);

// The same draw converted to Lab.
LabImage uniform_rgb(int width, int height, std::uint64_t seed);

// Distance statistics averaged over independent realizations of a null
// model. Realization i uses derive_seed(seed, i), so results are
// reproducible and independent of evaluation order. Degenerate realizations
// are excluded from every average and counted.
struct NullStats {
    NullModelKind kind = NullModelKind::ShufflePixels;
    int samples = 0;
    std::uint64_t seed = 0;
    int degenerate_realizations = 0;
    int averaged_realizations = 0;

    std::uint64_t n_pairs = 0;
    double d_mean = 0.0;
    double d_std = 0.0;
    std::optional<double> s;
    std::vector<double> histogram;  // bin-wise mean, kHistogramBins entries

    bool degenerate() const { return !s.has_value(); }
};

NullStats null_distribution(const LabImage& img, NullModelKind kind, int samples,
                            std::uint64_t seed);

}  // namespace seams
