#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "seams/contrast.hpp"

namespace seams {

// Moment-level view of DistanceStats, the part persisted in the results
// store and carried on corpus records (full histograms are an analyze-time
// export, not corpus state).
struct StatsSummary {
    std::uint64_t n_pairs = 0;
    double d_mean = 0.0;
    double d_std = 0.0;
    std::optional<double> s;

    bool degenerate() const { return !s.has_value(); }
};

inline StatsSummary summarize(const DistanceStats& st) {
    return {st.n_pairs, st.d_mean, st.d_std, st.s};
}

struct PaintingRecord {
    std::string painting_id;
    std::string artist_id;
    std::string artist_name;
    std::string title;
    int year = 0;
    bool year_valid = false;
    std::string technique;
    std::string genre;
    std::string dataset;
    std::string file_path;  // relative to the images root

    std::optional<StatsSummary> stats;    // set by processing
    std::optional<std::string> failure;   // per-file processing failure

    // Aggregation rule: a valid year >= 1300 and non-degenerate stats.
    bool aggregate_eligible() const {
        return year_valid && year >= 1300 && stats.has_value() && !stats->degenerate();
    }
};

struct ManifestData {
    std::vector<PaintingRecord> records;
    // Human-readable notes for flagged rows (bad year, pre-1300 exclusion);
    // flagged rows stay in `records`, they are never silently dropped.
    std::vector<std::string> issues;
};

// Loads a CSV (header required; columns painting_id, artist_id, year,
// file_path mandatory; artist_name, title, technique, genre, dataset
// optional) or a JSONL file (one object per line, same keys), chosen by
// extension. Throws SchemaError with the offending row number and
// DuplicateId for repeated painting ids.
ManifestData load_manifest(const std::filesystem::path& path);

}  // namespace seams
