#include "seams/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "seams/error.hpp"
#include "seams/imageio.hpp"
#include "seams/version.hpp"

namespace seams {
namespace {

struct SlotResult {
    bool cache_hit = false;
    bool needs_append = false;
    bool decoded = false;
    StoreEntry entry;                 // valid when needs_append or cache_hit
    std::optional<std::string> hard_failure;  // file unreadable, no hash
};

SlotResult process_one(const PaintingRecord& rec, const ResultsStore& store,
                       const std::filesystem::path& images_root, bool allow_decode) {
    SlotResult res;
    const std::filesystem::path path = images_root / rec.file_path;

    std::string hash;
    try {
        hash = sha256_file(path);
    } catch (const DataError& e) {
        res.hard_failure = e.what();
        return res;
    }

    if (const StoreEntry* hit = store.lookup(hash, kParamsVersion)) {
        res.cache_hit = true;
        res.entry = *hit;
        return res;
    }
    if (!allow_decode) {
        res.hard_failure = "no cached result in store for " + rec.file_path;
        return res;
    }

    res.decoded = true;
    res.needs_append = true;
    res.entry.hash = hash;
    res.entry.params = kParamsVersion;
    try {
        const SrgbImage img = decode_image(path);
        res.entry.stats = summarize(analyze_image(to_lab(img)));
    } catch (const DataError& e) {
        res.entry.error = e.what();
    }
    return res;
}

ProcessReport run_pool(std::vector<PaintingRecord>& records, ResultsStore* mutable_store,
                       const ResultsStore& store, const std::filesystem::path& images_root,
                       int parallelism, bool allow_decode) {
    if (parallelism < 1) throw DataError("parallelism must be >= 1");

    const std::size_t n = records.size();
    std::vector<SlotResult> slots(n);
    std::atomic<std::size_t> next{0};

    std::mutex write_mutex;
    std::map<std::size_t, const SlotResult*> pending;  // completed, not yet drained
    std::size_t next_to_write = 0;
    std::exception_ptr store_failure;

    auto drain_in_order = [&](std::size_t idx) {
        // Store appends happen in record order regardless of completion
        // order, so the store file is scheduling-independent.
        std::lock_guard<std::mutex> lock(write_mutex);
        pending[idx] = &slots[idx];
        while (!pending.empty() && pending.begin()->first == next_to_write) {
            const SlotResult* r = pending.begin()->second;
            pending.erase(pending.begin());
            ++next_to_write;
            if (r->needs_append && mutable_store && !store_failure) {
                try {
                    mutable_store->append(r->entry);
                } catch (...) {
                    store_failure = std::current_exception();
                }
            }
        }
    };

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            slots[i] = process_one(records[i], store, images_root, allow_decode);
            drain_in_order(i);
        }
    };

    const int workers = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(parallelism), std::max<std::size_t>(n, 1)));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    if (store_failure) std::rethrow_exception(store_failure);

    ProcessReport report;
    report.total = n;
    for (std::size_t i = 0; i < n; ++i) {
        const SlotResult& r = slots[i];
        PaintingRecord& rec = records[i];
        if (r.hard_failure) {
            rec.failure = *r.hard_failure;
            report.failures.emplace_back(rec.painting_id, *r.hard_failure);
            continue;
        }
        if (r.cache_hit) report.cache_hits += 1;
        if (r.decoded) report.decoded += 1;
        if (!r.entry.error.empty()) {
            rec.failure = r.entry.error;
            report.failures.emplace_back(rec.painting_id, r.entry.error);
        } else if (r.entry.stats) {
            rec.stats = r.entry.stats;
            if (r.entry.stats->degenerate()) report.degenerate += 1;
        }
    }
    return report;
}

}  // namespace

ProcessReport process_corpus(std::vector<PaintingRecord>& records, ResultsStore& store,
                             const std::filesystem::path& images_root, int parallelism) {
    return run_pool(records, &store, store, images_root, parallelism, /*allow_decode=*/true);
}

ProcessReport attach_stats(std::vector<PaintingRecord>& records, const ResultsStore& store,
                           const std::filesystem::path& images_root, int parallelism) {
    return run_pool(records, nullptr, store, images_root, parallelism, /*allow_decode=*/false);
}

std::vector<TimeSeriesPoint> timeseries(std::span<const PaintingRecord> records,
                                        int bucket_years) {
    if (bucket_years < 1) throw DataError("bucket must be >= 1 year");

    std::map<int, std::vector<double>> buckets;
    for (const PaintingRecord& rec : records) {
        if (!rec.aggregate_eligible()) continue;
        const int period = (rec.year / bucket_years) * bucket_years;
        buckets[period].push_back(*rec.stats->s);
    }

    std::vector<TimeSeriesPoint> out;
    out.reserve(buckets.size());
    for (const auto& [period, values] : buckets) {
        const auto [mean, sd] = mean_stddev(values);
        TimeSeriesPoint pt;
        pt.period_start = period;
        pt.n = values.size();
        pt.s_mean = mean;
        pt.s_std = sd;
        pt.s_sem = sd / std::sqrt(static_cast<double>(values.size()));
        out.push_back(pt);
    }
    return out;
}

GroupCompareResult group_compare(std::span<const PaintingRecord> records, Grouping grouping,
                                 const GroupCompareOptions& options) {
    auto group_of = [&](const PaintingRecord& r) -> const std::string& {
        return grouping == Grouping::Technique ? r.technique : r.genre;
    };

    std::map<std::string, std::vector<const PaintingRecord*>> groups;
    for (const PaintingRecord& rec : records) {
        if (!rec.aggregate_eligible()) continue;
        const std::string& g = group_of(rec);
        if (g.empty()) continue;
        groups[g].push_back(&rec);
    }

    GroupCompareResult result;
    std::map<std::string, std::vector<double>> window_s;
    for (const auto& [name, members] : groups) {
        std::vector<PaintingRecord> copy;
        copy.reserve(members.size());
        for (const PaintingRecord* r : members) copy.push_back(*r);
        result.series.emplace_back(name, timeseries(copy, options.bucket_years));

        auto& ws = window_s[name];
        for (const PaintingRecord* r : members) {
            if (r->year >= options.year_min && r->year <= options.year_max) {
                ws.push_back(*r->stats->s);
            }
        }
    }

    std::vector<std::string> names;
    for (const auto& [name, _] : groups) names.push_back(name);
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            KsPairResult pair;
            pair.group_a = names[i];
            pair.group_b = names[j];
            const auto& a = window_s[names[i]];
            const auto& b = window_s[names[j]];
            if (a.size() < options.min_group || b.size() < options.min_group) {
                pair.note = "group too small (" + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()) + ", minimum " +
                            std::to_string(options.min_group) + ")";
            } else {
                pair.ks = ks_two_sample(a, b);
            }
            result.pairs.push_back(std::move(pair));
        }
    }
    return result;
}

}  // namespace seams
