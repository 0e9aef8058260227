#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seams/manifest.hpp"
#include "seams/stats.hpp"

namespace seams {

// Per-artist view of the processed corpus: (year, S) series plus the derived
// individuality scores. Slope/mu require paintings in enough distinct years;
// nu requires more than SingularityOptions::min_paintings works.
struct ArtistProfile {
    std::string artist_id;
    std::vector<std::pair<int, double>> paintings;  // (year, s), aggregate-eligible only
    int first_year = 0;
    int last_year = 0;
    int distinct_years = 0;

    std::optional<double> diversity;  // population std of s, >= 2 paintings
    std::optional<double> slope;      // over the normalized career
    std::optional<double> mu;         // z-score of slope in the eligible population
    std::optional<double> nu;         // frac(z > 1) - frac(z < -1)
    double frac_high = 0.0;
    double frac_low = 0.0;
    std::size_t n_defined = 0;  // z-defined paintings backing the fractions
};

// Groups aggregate-eligible records by artist, sorted by artist_id;
// paintings sorted by (year, painting_id). Diversity is filled here.
std::vector<ArtistProfile> build_profiles(std::span<const PaintingRecord> records);

// Maps years onto t in [0, 1]: t = (year - first)/(last - first). Paintings
// from the same year share t. Throws SingleYearCareer.
std::vector<std::pair<double, double>> career_normalize(
    std::span<const std::pair<int, double>> paintings);

struct MetamorphosalityOptions {
    int modern_cutoff = 1800;     // career midpoint must reach this year
    int min_distinct_years = 5;   // "at least five distinct years"
};

struct MetamorphosalityReport {
    std::size_t eligible = 0;
    double slope_mean = 0.0;
    double slope_std = 0.0;      // population
    bool zero_spread = false;    // all slopes equal: mu undefined for all
    std::vector<std::string> skipped;  // artists whose fit failed
};

// Fills slope for every eligible artist and mu as the z-score of the slope
// within the eligible population. Ineligible artists keep both empty.
MetamorphosalityReport metamorphosality(std::vector<ArtistProfile>& profiles,
                                        const MetamorphosalityOptions& options = {});

enum class SingularityBand { High, Low, Typical, Undefined };

const char* to_string(SingularityBand band);

struct SingularityVerdict {
    std::string painting_id;
    std::size_t window_n = 0;    // contemporaries backing z
    std::optional<double> z;
    SingularityBand band = SingularityBand::Undefined;
};

struct SingularityOptions {
    int window_radius = 5;        // years before and after: an 11-year span
    std::size_t min_window = 30;  // contemporaries needed for a defined z
    std::size_t min_paintings = 40;  // nu needs strictly more works than this
};

// Scores every record against all non-degenerate paintings (any artist) in
// [year - r, year + r], excluding the painting itself, and fills nu /
// frac_high / frac_low / n_defined on the profiles. Verdicts come back in
// record order; ineligible or degenerate records are Undefined.
std::vector<SingularityVerdict> singularity(std::span<const PaintingRecord> records,
                                            std::vector<ArtistProfile>& profiles,
                                            const SingularityOptions& options = {});

struct DiversityRow {
    std::string artist_id;
    std::size_t painting_count = 0;
    std::optional<double> diversity;
};

struct DiversityReport {
    std::vector<DiversityRow> rows;
    // Pearson correlation of painting_count vs diversity across artists with
    // defined diversity; empty with a note when the correlation is undefined.
    std::optional<double> count_diversity_correlation;
    std::string correlation_note;
};

DiversityReport diversity_report(std::span<const ArtistProfile> profiles);

}  // namespace seams
