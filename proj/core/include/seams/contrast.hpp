#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "seams/error.hpp"
#include "seams/image.hpp"
#include "seams/stats.hpp"

namespace seams {

// Histogram of adjacent-pair distances: unit-width bins over [0, 400) plus a
// final overflow bin for d >= 400 (the sRGB gamut maximum is well below 400).
inline constexpr int kHistogramBins = 401;
inline constexpr double kHistogramBinWidth = 1.0;

// Summary of the adjacent-pair distance multiset of one image. `s` is the
// seamlessness (sigma_d - mean_d)/(sigma_d + mean_d); it is empty for a
// zero-contrast (uniform) image, where the statistic is undefined. Degenerate
// results must never be coerced to a number or fed to aggregates.
struct DistanceStats {
    std::uint64_t n_pairs = 0;
    double d_mean = 0.0;
    double d_std = 0.0;
    std::optional<double> s;
    std::vector<std::uint64_t> histogram;  // kHistogramBins entries

    bool degenerate() const { return !s.has_value(); }
};

// Streaming consumer for a distance stream: single pass, order-independent
// moments (see MomentAccumulator), histogram counts.
class SeamlessnessAccumulator {
public:
    SeamlessnessAccumulator() : histogram_(kHistogramBins, 0) {}

    void add(double d) {
        moments_.add(d);
        const int bin = d >= 400.0 ? kHistogramBins - 1 : static_cast<int>(d);
        histogram_[static_cast<std::size_t>(bin)] += 1;
    }

    DistanceStats finish() const;

private:
    MomentAccumulator moments_;
    std::vector<std::uint64_t> histogram_;
};

// Visits delta_e for every horizontal neighbor pair (x,y)-(x+1,y), row-major,
// then every vertical pair (x,y)-(x,y+1), row-major. Requires at least one
// adjacent pair.
template <typename F>
void for_each_adjacent_distance(const LabImage& img, F&& f) {
    if (img.pixel_count() < 2) throw EmptyImage();
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x + 1 < img.width; ++x) {
            f(delta_e(img.at(x, y), img.at(x + 1, y)));
        }
    }
    for (int y = 0; y + 1 < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            f(delta_e(img.at(x, y), img.at(x, y + 1)));
        }
    }
}

// Materialized adjacent-pair distance stream, in the order above.
std::vector<double> adjacent_distances(const LabImage& img);

// Folds a distance stream into DistanceStats. Throws EmptyStream.
DistanceStats seamlessness(std::span<const double> distances);

// adjacent_distances composed with seamlessness, without materializing.
DistanceStats analyze_image(const LabImage& img);

// 2*W*H - W - H, the adjacent-pair count of a W x H grid.
inline std::uint64_t adjacent_pair_count(int width, int height) {
    const std::uint64_t w = static_cast<std::uint64_t>(width);
    const std::uint64_t h = static_cast<std::uint64_t>(height);
    return 2 * w * h - w - h;
}

}  // namespace seams
