#include "seams/stylometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "seams/error.hpp"

namespace seams {

std::vector<ArtistProfile> build_profiles(std::span<const PaintingRecord> records) {
    std::map<std::string, std::vector<std::pair<std::pair<int, std::string>, double>>> grouped;
    for (const PaintingRecord& rec : records) {
        if (!rec.aggregate_eligible()) continue;
        grouped[rec.artist_id].push_back({{rec.year, rec.painting_id}, *rec.stats->s});
    }

    std::vector<ArtistProfile> profiles;
    profiles.reserve(grouped.size());
    for (auto& [artist_id, works] : grouped) {
        std::sort(works.begin(), works.end());
        ArtistProfile p;
        p.artist_id = artist_id;
        p.first_year = works.front().first.first;
        p.last_year = works.back().first.first;
        std::vector<double> s_values;
        int prev_year = works.front().first.first - 1;
        for (const auto& [key, s] : works) {
            p.paintings.emplace_back(key.first, s);
            s_values.push_back(s);
            if (key.first != prev_year) {
                p.distinct_years += 1;
                prev_year = key.first;
            }
        }
        if (s_values.size() >= 2) {
            p.diversity = mean_stddev(s_values).second;
        }
        profiles.push_back(std::move(p));
    }
    return profiles;
}

std::vector<std::pair<double, double>> career_normalize(
    std::span<const std::pair<int, double>> paintings) {
    if (paintings.empty()) throw EmptySample();
    int first = paintings[0].first, last = paintings[0].first;
    for (const auto& [year, _] : paintings) {
        first = std::min(first, year);
        last = std::max(last, year);
    }
    if (first == last) throw SingleYearCareer();

    const double span = static_cast<double>(last - first);
    std::vector<std::pair<double, double>> out;
    out.reserve(paintings.size());
    for (const auto& [year, s] : paintings) {
        out.emplace_back(static_cast<double>(year - first) / span, s);
    }
    return out;
}

MetamorphosalityReport metamorphosality(std::vector<ArtistProfile>& profiles,
                                        const MetamorphosalityOptions& options) {
    MetamorphosalityReport report;

    std::vector<ArtistProfile*> eligible;
    std::vector<double> slopes;
    for (ArtistProfile& p : profiles) {
        p.slope.reset();
        p.mu.reset();
        if (p.distinct_years < options.min_distinct_years) continue;
        const double midpoint = (p.first_year + p.last_year) / 2.0;
        if (midpoint < options.modern_cutoff) continue;
        try {
            const auto ts = career_normalize(p.paintings);
            p.slope = ols(ts).slope;
        } catch (const DataError& e) {
            report.skipped.push_back(p.artist_id + ": " + e.what());
            continue;
        }
        eligible.push_back(&p);
        slopes.push_back(*p.slope);
    }

    report.eligible = eligible.size();
    if (slopes.empty()) return report;

    const auto [mean, sd] = mean_stddev(slopes);
    report.slope_mean = mean;
    report.slope_std = sd;
    if (sd == 0.0) {
        report.zero_spread = true;  // mu stays undefined for everyone
        return report;
    }
    for (ArtistProfile* p : eligible) {
        p->mu = (*p->slope - mean) / sd;
    }
    return report;
}

const char* to_string(SingularityBand band) {
    switch (band) {
        case SingularityBand::High: return "high";
        case SingularityBand::Low: return "low";
        case SingularityBand::Typical: return "typical";
        case SingularityBand::Undefined: return "undefined";
    }
    return "undefined";
}

std::vector<SingularityVerdict> singularity(std::span<const PaintingRecord> records,
                                            std::vector<ArtistProfile>& profiles,
                                            const SingularityOptions& options) {
    // Year-indexed prefix sums over all eligible paintings give O(1) window
    // moments per painting.
    std::map<int, std::array<double, 3>> per_year;  // n, sum, sumsq
    for (const PaintingRecord& rec : records) {
        if (!rec.aggregate_eligible()) continue;
        auto& acc = per_year[rec.year];
        const double s = *rec.stats->s;
        acc[0] += 1.0;
        acc[1] += s;
        acc[2] += s * s;
    }
    std::vector<int> years;
    std::vector<std::array<double, 3>> prefix;  // prefix[i] sums years[0..i]
    years.reserve(per_year.size());
    prefix.reserve(per_year.size());
    std::array<double, 3> running{0.0, 0.0, 0.0};
    for (const auto& [year, acc] : per_year) {
        years.push_back(year);
        for (int k = 0; k < 3; ++k) running[static_cast<std::size_t>(k)] += acc[static_cast<std::size_t>(k)];
        prefix.push_back(running);
    }
    auto cumulative_up_to = [&](int year) -> std::array<double, 3> {
        // sum over all years <= year
        const auto it = std::upper_bound(years.begin(), years.end(), year);
        if (it == years.begin()) return {0.0, 0.0, 0.0};
        return prefix[static_cast<std::size_t>(it - years.begin() - 1)];
    };

    std::map<std::string, std::array<std::size_t, 3>> artist_counts;  // high, low, defined

    std::vector<SingularityVerdict> verdicts;
    verdicts.reserve(records.size());
    for (const PaintingRecord& rec : records) {
        SingularityVerdict v;
        v.painting_id = rec.painting_id;
        if (!rec.aggregate_eligible()) {
            verdicts.push_back(std::move(v));
            continue;
        }
        const auto hi = cumulative_up_to(rec.year + options.window_radius);
        const auto lo = cumulative_up_to(rec.year - options.window_radius - 1);
        const double s = *rec.stats->s;
        const double n = hi[0] - lo[0] - 1.0;  // window minus the painting itself
        const double sum = hi[1] - lo[1] - s;
        const double sumsq = hi[2] - lo[2] - s * s;
        v.window_n = static_cast<std::size_t>(n);

        if (n >= static_cast<double>(options.min_window)) {
            const double mean = sum / n;
            const double var = (sumsq - sum * sum / n) / n;
            if (var > 0.0) {
                const double z = (s - mean) / std::sqrt(var);
                v.z = z;
                v.band = z > 1.0 ? SingularityBand::High
                                 : (z < -1.0 ? SingularityBand::Low : SingularityBand::Typical);
                auto& counts = artist_counts[rec.artist_id];
                counts[2] += 1;
                if (v.band == SingularityBand::High) counts[0] += 1;
                if (v.band == SingularityBand::Low) counts[1] += 1;
            }
        }
        verdicts.push_back(std::move(v));
    }

    for (ArtistProfile& p : profiles) {
        p.nu.reset();
        p.frac_high = 0.0;
        p.frac_low = 0.0;
        p.n_defined = 0;
        const auto it = artist_counts.find(p.artist_id);
        if (it == artist_counts.end()) continue;
        const auto& [high, low, defined] = it->second;
        p.n_defined = defined;
        if (defined == 0) continue;
        p.frac_high = static_cast<double>(high) / static_cast<double>(defined);
        p.frac_low = static_cast<double>(low) / static_cast<double>(defined);
        if (p.paintings.size() > options.min_paintings) {
            p.nu = p.frac_high - p.frac_low;
        }
    }
    return verdicts;
}

DiversityReport diversity_report(std::span<const ArtistProfile> profiles) {
    DiversityReport report;
    std::vector<std::pair<double, double>> points;
    for (const ArtistProfile& p : profiles) {
        report.rows.push_back({p.artist_id, p.paintings.size(), p.diversity});
        if (p.diversity) {
            points.emplace_back(static_cast<double>(p.paintings.size()), *p.diversity);
        }
    }
    if (points.size() < 2) {
        report.correlation_note = "fewer than two artists with defined diversity";
        return report;
    }
    try {
        report.count_diversity_correlation = pearson(points);
    } catch (const ZeroVariance&) {
        report.correlation_note = "zero variance in counts or diversities";
    }
    return report;
}

}  // namespace seams
