#include "seams/store.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>
#include <vector>

#include <openssl/evp.h>

#include <nlohmann/json.hpp>

#include "seams/error.hpp"

namespace seams {
namespace {

StoreEntry parse_line(const std::string& line, std::size_t row) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
        throw StoreCorruption("results store line " + std::to_string(row) + " is not valid json");
    }
    if (!j.is_object() || !j.contains("hash") || !j.contains("params")) {
        throw StoreCorruption("results store line " + std::to_string(row) + " lacks hash/params");
    }
    StoreEntry e;
    e.hash = j.at("hash").get<std::string>();
    e.params = j.at("params").get<std::string>();
    if (j.contains("error")) {
        e.error = j.at("error").get<std::string>();
        return e;
    }
    if (!j.contains("n_pairs") || !j.contains("d_mean") || !j.contains("d_std") ||
        !j.contains("s")) {
        throw StoreCorruption("results store line " + std::to_string(row) + " lacks stats fields");
    }
    StatsSummary s;
    s.n_pairs = j.at("n_pairs").get<std::uint64_t>();
    s.d_mean = j.at("d_mean").get<double>();
    s.d_std = j.at("d_std").get<double>();
    if (!j.at("s").is_null()) s.s = j.at("s").get<double>();
    e.stats = s;
    return e;
}

}  // namespace

ResultsStore::ResultsStore(const std::filesystem::path& file) : file_(file) {
    std::ifstream in(file);
    if (!in) return;  // fresh store

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            StoreEntry e = parse_line(lines[i], i + 1);
            entries_[key(e.hash, e.params)] = std::move(e);
        } catch (const StoreCorruption&) {
            if (i + 1 == lines.size()) break;  // torn final line from a crash
            throw;
        }
    }
}

const StoreEntry* ResultsStore::lookup(const std::string& hash, const std::string& params) const {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = entries_.find(key(hash, params));
    return it == entries_.end() ? nullptr : &it->second;
}

std::string ResultsStore::serialize(const StoreEntry& entry) const {
    nlohmann::ordered_json j;
    j["hash"] = entry.hash;
    j["params"] = entry.params;
    if (!entry.error.empty()) {
        j["error"] = entry.error;
    } else if (entry.stats) {
        j["n_pairs"] = entry.stats->n_pairs;
        j["d_mean"] = entry.stats->d_mean;
        j["d_std"] = entry.stats->d_std;
        if (entry.stats->s) j["s"] = *entry.stats->s;
        else j["s"] = nullptr;
    }
    return j.dump();
}

void ResultsStore::append(const StoreEntry& entry) {
    std::lock_guard<std::mutex> lock(mutex_);
    entries_[key(entry.hash, entry.params)] = entry;
    if (file_.empty()) return;
    std::ofstream out(file_, std::ios::app);
    if (!out) throw DataError("cannot append to results store: " + file_.string());
    out << serialize(entry) << '\n';
    if (!out) throw DataError("write failed on results store: " + file_.string());
}

void ResultsStore::compact() {
    std::lock_guard<std::mutex> lock(mutex_);
    if (file_.empty()) return;
    // Stable output order so compaction is deterministic.
    std::vector<const StoreEntry*> sorted;
    sorted.reserve(entries_.size());
    for (const auto& [k, e] : entries_) sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(), [](const StoreEntry* a, const StoreEntry* b) {
        return std::tie(a->hash, a->params) < std::tie(b->hash, b->params);
    });

    const std::filesystem::path tmp = file_.string() + ".compact";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw DataError("cannot write compacted store: " + tmp.string());
        for (const StoreEntry* e : sorted) out << serialize(*e) << '\n';
    }
    std::filesystem::rename(tmp, file_);
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read file for hashing: " + path.string());

    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw InternalError("EVP_MD_CTX_new failed");
    if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw InternalError("sha256 init failed");
    }
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof(buf));
        const std::streamsize got = in.gcount();
        if (got > 0 && EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(got)) != 1) {
            EVP_MD_CTX_free(ctx);
            throw InternalError("sha256 update failed");
        }
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw InternalError("sha256 final failed");
    }
    EVP_MD_CTX_free(ctx);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

}  // namespace seams
