#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "seams/contrast.hpp"
#include "seams/corpus.hpp"
#include "seams/null_models.hpp"
#include "seams/stylometry.hpp"

namespace seams {

// All file outputs use fixed field order and "%.9g" number formatting so
// repeated runs are byte-identical and golden-file tests stay portable.

std::string format_g9(double v);

void write_stats_json(const std::filesystem::path& path, const std::string& image_name, int width,
                      int height, const DistanceStats& stats);

void write_null_stats_json(const std::filesystem::path& path, const std::string& image_name,
                           int width, int height, const NullStats& stats);

void write_histogram_csv(const std::filesystem::path& path,
                         std::span<const std::uint64_t> histogram);
void write_histogram_csv(const std::filesystem::path& path, std::span<const double> histogram);

void write_sweep_csv(const std::filesystem::path& path, const std::string& image_id,
                     std::span<const std::pair<double, DistanceStats>> sweep);
void write_sweep_csv(const std::filesystem::path& path, const std::string& image_id,
                     std::span<const std::pair<int, DistanceStats>> sweep);

void write_fig5c_csv(const std::filesystem::path& path, std::span<const TimeSeriesPoint> series);
void write_fig5d_csv(const std::filesystem::path& path, std::span<const TimeSeriesPoint> series);
void write_fig6_csv(const std::filesystem::path& path, const GroupCompareResult& result);
void write_ks_pairs_csv(const std::filesystem::path& path, const GroupCompareResult& result);
void write_ks_skipped_csv(const std::filesystem::path& path, const GroupCompareResult& result);

void write_metamorphosality_csv(const std::filesystem::path& path,
                                std::span<const ArtistProfile> profiles);
void write_singularity_csv(const std::filesystem::path& path,
                           std::span<const ArtistProfile> profiles);
void write_verdicts_csv(const std::filesystem::path& path,
                        std::span<const SingularityVerdict> verdicts);
void write_diversity_csv(const std::filesystem::path& path, const DiversityReport& report);

std::string error_json(const std::string& kind, const std::string& message);

}  // namespace seams
