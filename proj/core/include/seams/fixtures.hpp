#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "seams/image.hpp"

namespace seams {

// Synthetic painting generator for tests and pipeline demos. Three style
// families, all built from gray levels so CIE76 distances reduce to exact
// L* differences:
//   - checkerboard: two alternating grays, S = -1 exactly
//   - noise: i.i.d. exponential lightness field, S near 0
//   - mosaic: two-family patch grid with an in-patch checkerboard texture;
//     the family separation D is bisected until the measured S hits the
//     target. Reachable targets: [-0.80, 0.68], plus exact -1 for targets
//     at or below -0.97. Anything else raises TargetUnreachable.

struct FixtureArtist {
    std::string id;
    std::string name;
    int first_year = 1900;
    int last_year = 1940;
    int paintings = 10;
    double s_start = 0.0;  // target S at career start
    double s_end = 0.0;    // target S at career end
    double s_noise = 0.0;  // gaussian jitter on per-painting targets
    std::string technique = "oil";
    std::string genre = "landscape";
};

struct FixtureSpec {
    std::vector<FixtureArtist> artists;
    int image_width = 96;
    int image_height = 96;
    std::string dataset = "synthetic";
    double target_tolerance = 0.05;
};

FixtureSpec parse_fixture_spec(const std::filesystem::path& json_path);

struct FixtureResult {
    std::filesystem::path manifest_path;
    std::size_t images_written = 0;
    double max_target_error = 0.0;
};

// Writes images/<artist>_<index>.png plus manifest.csv under out_dir.
// Deterministic for a fixed (spec, seed): every random quantity derives from
// per-painting child seeds. Each image's measured S lands within
// spec.target_tolerance of its target or the call throws TargetUnreachable.
FixtureResult generate_synthetic_corpus(const FixtureSpec& spec, std::uint64_t seed,
                                        const std::filesystem::path& out_dir);

// Exact-construction helpers, also used directly by tests.
SrgbImage make_checkerboard(int width, int height, Srgb8 a, Srgb8 b);

// Target-driven single image (style dispatch as described above).
SrgbImage make_target_image(int width, int height, double target_s, std::uint64_t seed);

// Scale-stable sweep fixture: a two-level patch grid whose transitions are
// linear ramps of width `border_frac` of a cell, so the high-gradient area
// fraction (and with it S) survives bicubic rescaling.
SrgbImage make_soft_mosaic(int width, int height, int cells_x, int cells_y, double border_frac,
                           double level_spread);

}  // namespace seams
