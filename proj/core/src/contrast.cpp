#include "seams/contrast.hpp"

namespace seams {

DistanceStats SeamlessnessAccumulator::finish() const {
    if (moments_.count() == 0) throw EmptyStream();
    DistanceStats stats;
    stats.n_pairs = moments_.count();
    stats.d_mean = moments_.mean();
    stats.d_std = moments_.stddev();
    stats.histogram = histogram_;
    if (stats.d_std + stats.d_mean > 0.0) {
        stats.s = (stats.d_std - stats.d_mean) / (stats.d_std + stats.d_mean);
    }
    return stats;
}

std::vector<double> adjacent_distances(const LabImage& img) {
    std::vector<double> out;
    out.reserve(adjacent_pair_count(img.width, img.height));
    for_each_adjacent_distance(img, [&](double d) { out.push_back(d); });
    return out;
}

DistanceStats seamlessness(std::span<const double> distances) {
    if (distances.empty()) throw EmptyStream();
    SeamlessnessAccumulator acc;
    for (double d : distances) acc.add(d);
    return acc.finish();
}

DistanceStats analyze_image(const LabImage& img) {
    SeamlessnessAccumulator acc;
    for_each_adjacent_distance(img, [&](double d) { acc.add(d); });
    return acc.finish();
}

}  // namespace seams
