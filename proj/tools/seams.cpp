// seams: color-contrast stylometry for digitized paintings.
//
// Exit codes: 0 success, 1 usage/config error, 2 data error (bad input
// files, degenerate image), 3 internal error.

#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "seams/corpus.hpp"
#include "seams/error.hpp"
#include "seams/export.hpp"
#include "seams/fixtures.hpp"
#include "seams/imageio.hpp"
#include "seams/null_models.hpp"
#include "seams/robustness.hpp"
#include "seams/store.hpp"
#include "seams/stylometry.hpp"
#include "seams/version.hpp"

namespace fs = std::filesystem;
using namespace seams;

namespace {

struct DegenerateOutput : DataError {
    DegenerateOutput() : DataError("uniform image, seamlessness undefined") {}
};

std::string stem_of(const std::string& path) {
    return fs::path(path).stem().string();
}

std::vector<double> parse_double_grid(const std::string& csv) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t next = csv.find(',', pos);
        if (next == std::string::npos) next = csv.size();
        out.push_back(std::stod(csv.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

int run_analyze(const std::string& image_path, const std::string& out_dir) {
    const SrgbImage img = decode_image(image_path);
    const DistanceStats stats = analyze_image(to_lab(img));
    const std::string stem = stem_of(image_path);
    fs::create_directories(out_dir);
    write_stats_json(fs::path(out_dir) / (stem + "_stats.json"), fs::path(image_path).filename().string(),
                     img.width, img.height, stats);
    write_histogram_csv(fs::path(out_dir) / (stem + "_hist.csv"), stats.histogram);
    if (stats.degenerate()) throw DegenerateOutput();
    return 0;
}

int run_null(const std::string& image_path, const std::string& kind_name, int samples,
             std::uint64_t seed, const std::string& out_dir) {
    const NullModelKind kind =
        kind_name == "uniform" ? NullModelKind::UniformRgb : NullModelKind::ShufflePixels;
    const SrgbImage img = decode_image(image_path);
    const NullStats stats = null_distribution(to_lab(img), kind, samples, seed);
    const std::string stem = stem_of(image_path);
    fs::create_directories(out_dir);
    const std::string base = stem + "_null_" + to_string(kind);
    write_null_stats_json(fs::path(out_dir) / (base + "_stats.json"),
                          fs::path(image_path).filename().string(), img.width, img.height, stats);
    write_histogram_csv(fs::path(out_dir) / (base + "_hist.csv"), stats.histogram);
    if (stats.degenerate()) throw DegenerateOutput();
    return 0;
}

int run_robustness(const std::string& image_path, const std::string& mode,
                   const std::string& grid_arg, const std::string& out_dir) {
    const SrgbImage img = decode_image(image_path);
    const std::string stem = stem_of(image_path);
    fs::create_directories(out_dir);
    if (mode == "temperature") {
        std::vector<double> grid =
            grid_arg.empty() ? default_temperature_grid() : parse_double_grid(grid_arg);
        const auto sweep = temperature_sweep(img, grid);
        write_sweep_csv(fs::path(out_dir) / (stem + "_temperature_sweep.csv"), stem, sweep);
    } else {
        std::vector<int> grid;
        if (grid_arg.empty()) {
            grid = default_width_grid();
        } else {
            for (double v : parse_double_grid(grid_arg)) grid.push_back(static_cast<int>(v));
        }
        const auto sweep = size_sweep(img, grid);
        write_sweep_csv(fs::path(out_dir) / (stem + "_size_sweep.csv"), stem, sweep);
    }
    return 0;
}

void report_to_stderr(const ManifestData& manifest, const ProcessReport& report) {
    for (const std::string& issue : manifest.issues) std::cerr << "note: " << issue << '\n';
    for (const auto& [id, reason] : report.failures) {
        std::cerr << "failure: " << id << ": " << reason << '\n';
    }
    std::cout << "processed " << report.total << " records: " << report.cache_hits
              << " cache hits, " << report.decoded << " decoded, " << report.failures.size()
              << " failures, " << report.degenerate << " degenerate\n";
}

int run_corpus(const std::string& manifest_path, const std::string& images_root,
               const std::string& store_path, const std::string& out_dir, int parallelism,
               int bucket, const std::string& group_by, int ks_year_min, int ks_year_max,
               std::size_t min_group, bool compact) {
    ManifestData manifest = load_manifest(manifest_path);
    ResultsStore store{fs::path(store_path)};
    const ProcessReport report = process_corpus(manifest.records, store, images_root, parallelism);
    report_to_stderr(manifest, report);

    fs::create_directories(out_dir);
    const auto series = timeseries(manifest.records, bucket);
    write_fig5c_csv(fs::path(out_dir) / "fig5c.csv", series);
    write_fig5d_csv(fs::path(out_dir) / "fig5d.csv", series);

    GroupCompareOptions opts;
    opts.bucket_years = bucket;
    opts.year_min = ks_year_min;
    opts.year_max = ks_year_max;
    opts.min_group = min_group;
    const Grouping grouping = group_by == "genre" ? Grouping::Genre : Grouping::Technique;
    const GroupCompareResult groups = group_compare(manifest.records, grouping, opts);
    write_fig6_csv(fs::path(out_dir) / "fig6.csv", groups);
    write_ks_pairs_csv(fs::path(out_dir) / "ks_pairs.csv", groups);
    write_ks_skipped_csv(fs::path(out_dir) / "ks_skipped.csv", groups);

    if (compact) store.compact();
    return 0;
}

int run_stylometry(const std::string& manifest_path, const std::string& images_root,
                   const std::string& store_path, const std::string& out_dir, int parallelism,
                   int modern_cutoff, int min_distinct_years, int window_radius,
                   std::size_t min_window, std::size_t min_paintings) {
    ManifestData manifest = load_manifest(manifest_path);
    const ResultsStore store{fs::path(store_path)};
    const ProcessReport report = attach_stats(manifest.records, store, images_root, parallelism);
    report_to_stderr(manifest, report);

    auto profiles = build_profiles(manifest.records);

    MetamorphosalityOptions mopts;
    mopts.modern_cutoff = modern_cutoff;
    mopts.min_distinct_years = min_distinct_years;
    const MetamorphosalityReport mreport = metamorphosality(profiles, mopts);
    for (const std::string& s : mreport.skipped) std::cerr << "skipped: " << s << '\n';
    if (mreport.zero_spread) {
        std::cerr << "note: slope population has zero spread, mu undefined for all artists\n";
    }

    SingularityOptions sopts;
    sopts.window_radius = window_radius;
    sopts.min_window = min_window;
    sopts.min_paintings = min_paintings;
    const auto verdicts = singularity(manifest.records, profiles, sopts);

    const DiversityReport diversity = diversity_report(profiles);
    if (!diversity.correlation_note.empty()) {
        std::cerr << "note: diversity correlation undefined: " << diversity.correlation_note
                  << '\n';
    }

    fs::create_directories(out_dir);
    write_metamorphosality_csv(fs::path(out_dir) / "metamorphosality.csv", profiles);
    write_singularity_csv(fs::path(out_dir) / "singularity.csv", profiles);
    write_verdicts_csv(fs::path(out_dir) / "verdicts.csv", verdicts);
    write_diversity_csv(fs::path(out_dir) / "diversity.csv", diversity);

    std::cout << "artists: " << profiles.size() << ", slope-eligible: " << mreport.eligible
              << ", slope mean " << format_g9(mreport.slope_mean) << ", slope std "
              << format_g9(mreport.slope_std);
    if (diversity.count_diversity_correlation) {
        std::cout << ", count-diversity correlation "
                  << format_g9(*diversity.count_diversity_correlation);
    }
    std::cout << '\n';
    return 0;
}

int run_gen_fixtures(const std::string& spec_path, const std::string& out_dir,
                     std::uint64_t seed) {
    const FixtureSpec spec = parse_fixture_spec(spec_path);
    const FixtureResult result = generate_synthetic_corpus(spec, seed, out_dir);
    std::cout << "wrote " << result.images_written << " images, manifest "
              << result.manifest_path.string() << ", max target error "
              << format_g9(result.max_target_error) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"seams " + std::string(kVersion) +
                 ": seamlessness statistics over adjacent-pixel CIELab distances"};
    app.set_config("--config");
    app.require_subcommand(1);

    std::function<int()> action;

    // analyze
    {
        auto* cmd = app.add_subcommand("analyze", "distance stats and histogram for one image");
        auto image = std::make_shared<std::string>();
        auto out_dir = std::make_shared<std::string>(".");
        cmd->add_option("image", *image, "PNG or JPEG file")->required();
        cmd->add_option("--out-dir", *out_dir, "output directory");
        cmd->callback([=, &action] { action = [=] { return run_analyze(*image, *out_dir); }; });
    }
    // null
    {
        auto* cmd = app.add_subcommand("null", "averaged null-model distance stats");
        auto image = std::make_shared<std::string>();
        auto kind = std::make_shared<std::string>("shuffle");
        auto samples = std::make_shared<int>(100);
        auto seed = std::make_shared<std::uint64_t>();
        auto out_dir = std::make_shared<std::string>(".");
        cmd->add_option("image", *image, "PNG or JPEG file")->required();
        cmd->add_option("--kind", *kind, "shuffle | uniform")
            ->check(CLI::IsMember({"shuffle", "uniform"}));
        cmd->add_option("--samples", *samples, "realizations to average")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", *seed, "RNG seed")->required();
        cmd->add_option("--out-dir", *out_dir, "output directory");
        cmd->callback([=, &action] {
            action = [=] { return run_null(*image, *kind, *samples, *seed, *out_dir); };
        });
    }
    // robustness
    {
        auto* cmd = app.add_subcommand("robustness", "temperature or size sweep of S");
        auto image = std::make_shared<std::string>();
        auto mode = std::make_shared<std::string>();
        auto grid = std::make_shared<std::string>();
        auto out_dir = std::make_shared<std::string>(".");
        cmd->add_option("image", *image, "PNG or JPEG file")->required();
        cmd->add_option("--mode", *mode, "temperature | size")
            ->required()
            ->check(CLI::IsMember({"temperature", "size"}));
        cmd->add_option("--grid", *grid, "comma-separated sweep values (defaults per mode)");
        cmd->add_option("--out-dir", *out_dir, "output directory");
        cmd->callback([=, &action] {
            action = [=] { return run_robustness(*image, *mode, *grid, *out_dir); };
        });
    }
    // corpus
    {
        auto* cmd = app.add_subcommand("corpus", "batch analysis, cache, figure exports");
        auto manifest = std::make_shared<std::string>();
        auto images_root = std::make_shared<std::string>(".");
        auto store = std::make_shared<std::string>();
        auto out_dir = std::make_shared<std::string>(".");
        auto parallelism =
            std::make_shared<int>(static_cast<int>(std::thread::hardware_concurrency()));
        auto bucket = std::make_shared<int>(10);
        auto group_by = std::make_shared<std::string>("technique");
        auto ks_min = std::make_shared<int>(1300);
        auto ks_max = std::make_shared<int>(99999);
        auto min_group = std::make_shared<std::size_t>(20);
        auto compact = std::make_shared<bool>(false);
        cmd->add_option("--manifest", *manifest, "manifest csv/jsonl")->required();
        cmd->add_option("--images-root", *images_root, "base directory for file_path entries");
        cmd->add_option("--store", *store, "results store jsonl")->required();
        cmd->add_option("--out-dir", *out_dir, "output directory");
        cmd->add_option("--parallelism", *parallelism, "worker count")->check(CLI::PositiveNumber);
        cmd->add_option("--bucket", *bucket, "years per time-series bin")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--group-by", *group_by, "technique | genre")
            ->check(CLI::IsMember({"technique", "genre"}));
        cmd->add_option("--ks-year-min", *ks_min, "KS window start year");
        cmd->add_option("--ks-year-max", *ks_max, "KS window end year");
        cmd->add_option("--min-group", *min_group, "minimum group size for KS");
        cmd->add_flag("--compact-store", *compact, "rewrite the store deduplicated after the run");
        cmd->callback([=, &action] {
            action = [=] {
                return run_corpus(*manifest, *images_root, *store, *out_dir, *parallelism,
                                  *bucket, *group_by, *ks_min, *ks_max, *min_group, *compact);
            };
        });
    }
    // stylometry
    {
        auto* cmd = app.add_subcommand("stylometry", "per-artist scores from a filled store");
        auto manifest = std::make_shared<std::string>();
        auto images_root = std::make_shared<std::string>(".");
        auto store = std::make_shared<std::string>();
        auto out_dir = std::make_shared<std::string>(".");
        auto parallelism =
            std::make_shared<int>(static_cast<int>(std::thread::hardware_concurrency()));
        auto modern_cutoff = std::make_shared<int>(1800);
        auto min_years = std::make_shared<int>(5);
        auto window_radius = std::make_shared<int>(5);
        auto min_window = std::make_shared<std::size_t>(30);
        auto min_paintings = std::make_shared<std::size_t>(40);
        cmd->add_option("--manifest", *manifest, "manifest csv/jsonl")->required();
        cmd->add_option("--images-root", *images_root, "base directory for file_path entries");
        cmd->add_option("--store", *store, "results store jsonl (read-only)")->required();
        cmd->add_option("--out-dir", *out_dir, "output directory");
        cmd->add_option("--parallelism", *parallelism, "worker count")->check(CLI::PositiveNumber);
        cmd->add_option("--modern-cutoff", *modern_cutoff,
                        "career midpoint year for slope eligibility");
        cmd->add_option("--min-distinct-years", *min_years, "distinct years for slope eligibility");
        cmd->add_option("--window-radius", *window_radius, "singularity window half-width, years");
        cmd->add_option("--min-window", *min_window, "contemporaries needed for a defined z");
        cmd->add_option("--min-paintings", *min_paintings,
                        "nu requires strictly more paintings than this");
        cmd->callback([=, &action] {
            action = [=] {
                return run_stylometry(*manifest, *images_root, *store, *out_dir, *parallelism,
                                      *modern_cutoff, *min_years, *window_radius, *min_window,
                                      *min_paintings);
            };
        });
    }
    // gen-fixtures
    {
        auto* cmd = app.add_subcommand("gen-fixtures", "synthetic corpus with targeted S values");
        auto spec = std::make_shared<std::string>();
        auto out_dir = std::make_shared<std::string>();
        auto seed = std::make_shared<std::uint64_t>();
        cmd->add_option("--spec", *spec, "generator spec json")->required();
        cmd->add_option("--out-dir", *out_dir, "output directory")->required();
        cmd->add_option("--seed", *seed, "RNG seed")->required();
        cmd->callback([=, &action] {
            action = [=] { return run_gen_fixtures(*spec, *out_dir, *seed); };
        });
    }
    // compact-store
    {
        auto* cmd = app.add_subcommand("compact-store", "rewrite a results store deduplicated");
        auto store = std::make_shared<std::string>();
        cmd->add_option("--store", *store, "results store jsonl")->required();
        cmd->callback([=, &action] {
            action = [=] {
                ResultsStore s{fs::path(*store)};
                s.compact();
                std::cout << "compacted " << *store << " (" << s.size() << " entries)\n";
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        return action ? action() : 1;
    } catch (const DegenerateOutput& e) {
        std::cerr << error_json("degenerate", e.what()) << '\n';
        return 2;
    } catch (const DataError& e) {
        std::cerr << error_json("data", e.what()) << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << error_json("internal", e.what()) << '\n';
        return 3;
    }
}
