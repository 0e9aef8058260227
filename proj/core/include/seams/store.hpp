#pragma once

#include <filesystem>
#include <mutex>
#include <string>
#include <unordered_map>

#include "seams/manifest.hpp"

namespace seams {

// One cached result, keyed by (content hash of the image bytes, processing
// parameter version). Either `stats` is set or `error` records a durable
// per-file failure (e.g. a decode error), so reruns skip known-bad inputs.
struct StoreEntry {
    std::string hash;
    std::string params;
    std::optional<StatsSummary> stats;
    std::string error;
};

// Append-only JSONL results cache. Every append goes straight to disk, so a
// crashed batch resumes from what it finished; a truncated final line (the
// crash artifact) is tolerated on load, any other malformed line raises
// StoreCorruption. compact() rewrites the file with one line per key.
class ResultsStore {
public:
    ResultsStore() = default;  // in-memory only, nothing persisted
    explicit ResultsStore(const std::filesystem::path& file);

    const StoreEntry* lookup(const std::string& hash, const std::string& params) const;

    // Inserts and persists; last write wins for an existing key.
    void append(const StoreEntry& entry);

    void compact();

    std::size_t size() const { return entries_.size(); }
    const std::filesystem::path& file() const { return file_; }

private:
    static std::string key(const std::string& hash, const std::string& params) {
        return hash + '\x1f' + params;
    }
    std::string serialize(const StoreEntry& entry) const;

    std::filesystem::path file_;
    std::unordered_map<std::string, StoreEntry> entries_;
    mutable std::mutex mutex_;
};

// Hex SHA-256 of a file's bytes. Throws DataError when unreadable.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace seams
