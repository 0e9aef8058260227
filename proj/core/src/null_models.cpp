#include "seams/null_models.hpp"

#include "seams/error.hpp"
#include "seams/rng.hpp"

namespace seams {

const char* to_string(NullModelKind kind) {
    return kind == NullModelKind::ShufflePixels ? "shuffle" : "uniform";
}

LabImage shuffle_pixels(const LabImage& img, std::uint64_t seed) {
    LabImage out = img;
    Rng rng(seed);
    rng.shuffle(out.pixels);
    return out;
}

SrgbImage shuffle_pixels(const SrgbImage& img, std::uint64_t seed) {
    SrgbImage out = img;
    Rng rng(seed);
    rng.shuffle(out.pixels);
    return out;
}

SrgbImage uniform_rgb_srgb(int width, int height, std::uint64_t seed) {
    if (width < 1 || height < 1) throw DataError("uniform_rgb: empty dimensions");
    SrgbImage out(width, height);
    Rng rng(seed);
    for (auto& px : out.pixels) {
        rng.rgb_bytes(px.r, px.g, px.b);
    }
    return out;
}

LabImage uniform_rgb(int width, int height, std::uint64_t seed) {
    return to_lab(uniform_rgb_srgb(width, height, seed));
}

NullStats null_distribution(const LabImage& img, NullModelKind kind, int samples,
                            std::uint64_t seed) {
    if (samples < 1) throw DataError("null_distribution: samples must be >= 1");

    NullStats agg;
    agg.kind = kind;
    agg.samples = samples;
    agg.seed = seed;
    agg.n_pairs = adjacent_pair_count(img.width, img.height);
    agg.histogram.assign(kHistogramBins, 0.0);

    double sum_mean = 0.0, sum_std = 0.0, sum_s = 0.0;
    for (int i = 0; i < samples; ++i) {
        const std::uint64_t rseed = derive_seed(seed, static_cast<std::uint64_t>(i));
        const LabImage realization = kind == NullModelKind::ShufflePixels
                                         ? shuffle_pixels(img, rseed)
                                         : uniform_rgb(img.width, img.height, rseed);
        const DistanceStats stats = analyze_image(realization);
        if (stats.degenerate()) {
            agg.degenerate_realizations += 1;
            continue;
        }
        agg.averaged_realizations += 1;
        sum_mean += stats.d_mean;
        sum_std += stats.d_std;
        sum_s += *stats.s;
        for (int b = 0; b < kHistogramBins; ++b) {
            agg.histogram[static_cast<std::size_t>(b)] +=
                static_cast<double>(stats.histogram[static_cast<std::size_t>(b)]);
        }
    }

    if (agg.averaged_realizations > 0) {
        const double k = static_cast<double>(agg.averaged_realizations);
        agg.d_mean = sum_mean / k;
        agg.d_std = sum_std / k;
        agg.s = sum_s / k;
        for (double& v : agg.histogram) v /= k;
    }
    return agg;
}

}  // namespace seams
