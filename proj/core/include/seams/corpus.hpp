#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "seams/manifest.hpp"
#include "seams/stats.hpp"
#include "seams/store.hpp"

namespace seams {

struct ProcessReport {
    std::size_t total = 0;
    std::size_t cache_hits = 0;
    std::size_t decoded = 0;
    std::size_t degenerate = 0;
    // (painting_id, reason); decode errors and missing files land here, the
    // batch itself never aborts on them.
    std::vector<std::pair<std::string, std::string>> failures;
};

// Attaches stats to every record: content-hash each file, reuse store
// entries on hit, decode + analyze on miss, append new results. Work fans
// out to `parallelism` workers; store appends are serialized in record order
// by an ordered single-writer drain, so the store file and all downstream
// exports are byte-identical regardless of parallelism or scheduling.
// StoreCorruption aborts; per-file problems are recorded and processing
// continues.
ProcessReport process_corpus(std::vector<PaintingRecord>& records, ResultsStore& store,
                             const std::filesystem::path& images_root, int parallelism);

// Hash-and-lookup only (no decoding): used by stylometry runs that read a
// previously filled store. Files absent from the store become failures.
ProcessReport attach_stats(std::vector<PaintingRecord>& records, const ResultsStore& store,
                           const std::filesystem::path& images_root, int parallelism);

struct TimeSeriesPoint {
    int period_start = 0;
    std::uint64_t n = 0;
    double s_mean = 0.0;
    double s_sem = 0.0;  // s_std / sqrt(n)
    double s_std = 0.0;  // population
};

// Bucketed evolution of S over aggregate-eligible records (valid year >=
// 1300, non-degenerate). Empty buckets are omitted; output sorted by period.
std::vector<TimeSeriesPoint> timeseries(std::span<const PaintingRecord> records,
                                        int bucket_years);

enum class Grouping { Technique, Genre };

struct GroupCompareOptions {
    int bucket_years = 10;
    int year_min = 1300;   // KS window
    int year_max = 99999;
    std::size_t min_group = 20;
};

struct KsPairResult {
    std::string group_a;
    std::string group_b;
    std::optional<KsResult> ks;  // empty when a side is below min_group
    std::string note;
};

struct GroupCompareResult {
    std::vector<std::pair<std::string, std::vector<TimeSeriesPoint>>> series;
    std::vector<KsPairResult> pairs;  // all unordered pairs, lexicographic
};

// Per-group S time series plus all-pairs two-sample KS tests over the year
// window. Records with an empty grouping field are ignored.
GroupCompareResult group_compare(std::span<const PaintingRecord> records, Grouping grouping,
                                 const GroupCompareOptions& options = {});

}  // namespace seams
