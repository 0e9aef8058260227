#include <doctest.h>

#include <cmath>
#include <vector>

#include "seams/error.hpp"
#include "seams/fixtures.hpp"
#include "seams/null_models.hpp"
#include "seams/robustness.hpp"
#include "seams/rng.hpp"

using namespace seams;

TEST_CASE("blackbody anchor: 1500 K is (255, 109, 0) exactly") {
    const Srgb8 c = blackbody_rgb(1500.0);
    CHECK(c.r == 255);
    CHECK(c.g == 109);
    CHECK(c.b == 0);
}

TEST_CASE("blackbody 6500 K is near white") {
    const Srgb8 c = blackbody_rgb(6500.0);
    CHECK(c.r >= 249);
    CHECK(c.g >= 249);
    CHECK(c.b >= 249);
}

TEST_CASE("table rows are returned without interpolation error") {
    CHECK(blackbody_rgb(1000.0) == Srgb8{255, 56, 0});
    CHECK(blackbody_rgb(3000.0) == Srgb8{255, 180, 107});
    CHECK(blackbody_rgb(10000.0) == Srgb8{204, 219, 255});
}

TEST_CASE("temperatures outside the table raise OutOfRange") {
    CHECK_THROWS_AS(blackbody_rgb(999.9), OutOfRange);
    CHECK_THROWS_AS(blackbody_rgb(10000.1), OutOfRange);
    CHECK_THROWS_AS(blackbody_rgb(0.0), OutOfRange);
    CHECK_THROWS_AS(apply_temperature(SrgbImage(2, 2), 20000.0), OutOfRange);
}

TEST_CASE("blue factor is nondecreasing over warm temperatures") {
    double prev = -1.0;
    for (double k = 1000.0; k <= 6600.0; k += 10.0) {
        const TemperatureFactor f = temperature_factor(k);
        CHECK(f.factor_b >= prev);
        prev = f.factor_b;
    }
}

TEST_CASE("apply_temperature anchors") {
    SrgbImage img(2, 1);
    img.at(0, 0) = {255, 255, 255};
    img.at(1, 0) = {0, 0, 0};
    const SrgbImage out = apply_temperature(img, 1500.0);
    CHECK(out.at(0, 0) == Srgb8{255, 109, 0});
    CHECK(out.at(1, 0) == Srgb8{0, 0, 0});

    // red factor is 1.0 everywhere at or below 6500 K: the red channel
    // passes through unchanged
    Rng rng(5);
    SrgbImage noise = uniform_rgb_srgb(16, 16, 77);
    const SrgbImage warmed = apply_temperature(noise, 4000.0);
    for (std::size_t i = 0; i < noise.pixels.size(); ++i) {
        CHECK(warmed.pixels[i].r == noise.pixels[i].r);
    }
}

TEST_CASE("temperature sweep of a checkerboard stays at s = -1") {
    const SrgbImage board = make_checkerboard(16, 16, {200, 50, 50}, {50, 200, 200});
    const std::vector<double> grid{1500.0, 4000.0, 6500.0, 10000.0};
    for (const auto& [k, stats] : temperature_sweep(board, grid)) {
        REQUIRE(stats.s.has_value());
        CHECK(*stats.s == -1.0);
    }
}

TEST_CASE("temperature sweep of a solid image is degenerate throughout") {
    SrgbImage solid(8, 8);
    for (auto& px : solid.pixels) px = {120, 130, 140};
    for (const auto& [k, stats] : temperature_sweep(solid, default_temperature_grid())) {
        CHECK(stats.degenerate());
    }
}

TEST_CASE("temperature scaling commutes with pixel shuffling") {
    const SrgbImage img = uniform_rgb_srgb(24, 18, 300);
    const std::uint64_t seed = 1234;
    const LabImage a = to_lab(apply_temperature(shuffle_pixels(img, seed), 2500.0));
    const LabImage b = shuffle_pixels(to_lab(apply_temperature(img, 2500.0)), seed);
    CHECK(a.pixels == b.pixels);

    const DistanceStats sa = analyze_image(a);
    const DistanceStats sb = analyze_image(b);
    CHECK(sa.s == sb.s);
    CHECK(sa.d_mean == sb.d_mean);
}

TEST_CASE("temperature sweep stability on a structured mosaic (frozen run)") {
    const SrgbImage mosaic = make_target_image(96, 96, 0.30, 4);
    const auto sweep = temperature_sweep(mosaic, default_temperature_grid());
    const double s0 = *analyze_image(to_lab(mosaic)).s;
    double max_dev = 0.0;
    for (const auto& [k, stats] : sweep) {
        REQUIRE(stats.s.has_value());
        max_dev = std::max(max_dev, std::abs(*stats.s - s0));
    }
    // end-to-end pipeline value captured once and frozen; gray mosaics keep
    // their two-level structure under per-channel scaling so S moves little
    CHECK(max_dev == doctest::Approx(0.0288109).epsilon(1e-4));
    CHECK(max_dev < 0.1);
}

TEST_CASE("resize to the current size reproduces the image") {
    const SrgbImage img = uniform_rgb_srgb(12, 7, 8);
    const SrgbImage out = resize_bicubic(img, 12);
    REQUIRE(out.width == 12);
    REQUIRE(out.height == 7);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        CHECK(std::abs(int(out.pixels[i].r) - int(img.pixels[i].r)) <= 1);
        CHECK(std::abs(int(out.pixels[i].g) - int(img.pixels[i].g)) <= 1);
        CHECK(std::abs(int(out.pixels[i].b) - int(img.pixels[i].b)) <= 1);
    }
}

TEST_CASE("resizing a solid image yields the same solid color") {
    SrgbImage solid(40, 30);
    for (auto& px : solid.pixels) px = {90, 160, 35};
    for (int target : {2, 7, 20, 64, 90}) {
        const SrgbImage out = resize_bicubic(solid, target);
        for (const auto& px : out.pixels) CHECK(px == Srgb8{90, 160, 35});
    }
}

TEST_CASE("4x4 gradient downsized to 2 matches the exact-rational kernel oracle") {
    SrgbImage img(4, 4);
    for (int y = 0; y < 4; ++y) {
        for (int x = 0; x < 4; ++x) {
            img.at(x, y) = {static_cast<std::uint8_t>(10 + 16 * x + 60 * y),
                            static_cast<std::uint8_t>(200 - 12 * x - 40 * y),
                            static_cast<std::uint8_t>(5 + 50 * x + 3 * y)};
        }
    }
    const SrgbImage out = resize_bicubic(img, 2);
    REQUIRE(out.width == 2);
    REQUIRE(out.height == 2);
    // frozen from the arbitrary-precision separable Catmull-Rom evaluation
    CHECK(out.at(0, 0) == Srgb8{43, 177, 28});
    CHECK(out.at(1, 0) == Srgb8{77, 152, 134});
    CHECK(out.at(0, 1) == Srgb8{171, 92, 35});
    CHECK(out.at(1, 1) == Srgb8{205, 67, 141});
}

TEST_CASE("resize targets below 2 are invalid") {
    const SrgbImage img = uniform_rgb_srgb(8, 8, 1);
    CHECK_THROWS_AS(resize_bicubic(img, 1), InvalidTarget);
    CHECK_THROWS_AS(resize_bicubic(img, 0), InvalidTarget);
    CHECK_THROWS_AS(size_sweep(img, std::vector<int>{500, 1}), InvalidTarget);
}

TEST_CASE("the longer side takes the target, aspect preserved") {
    const SrgbImage wide = uniform_rgb_srgb(10, 4, 2);
    const SrgbImage w2 = resize_bicubic(wide, 5);
    CHECK(w2.width == 5);
    CHECK(w2.height == 2);

    const SrgbImage tall = uniform_rgb_srgb(4, 10, 2);
    const SrgbImage t2 = resize_bicubic(tall, 5);
    CHECK(t2.width == 2);
    CHECK(t2.height == 5);
}

TEST_CASE("resize keeps the global channel mean within 2") {
    const SrgbImage img = uniform_rgb_srgb(160, 120, 21);
    auto mean_r = [](const SrgbImage& im) {
        double s = 0.0;
        for (const auto& px : im.pixels) s += px.r;
        return s / static_cast<double>(im.pixels.size());
    };
    for (int target : {100, 120, 200}) {
        const SrgbImage out = resize_bicubic(img, target);
        CHECK(std::abs(mean_r(out) - mean_r(img)) <= 2.0);
    }
}

TEST_CASE("size sweep of a coarse checkerboard stays at s = -1 while resolvable") {
    // cells of 25 px at 500 px width stay >= 8 px across the sweep
    SrgbImage board(1000, 800);
    for (int y = 0; y < 800; ++y) {
        for (int x = 0; x < 1000; ++x) {
            const bool onv = ((x / 50) + (y / 50)) & 1;
            board.at(x, y) = onv ? Srgb8{220, 220, 220} : Srgb8{30, 30, 30};
        }
    }
    // the flat interiors dominate: s stays pinned near the hard-edge limit
    for (const auto& [w, stats] : size_sweep(board, std::vector<int>{500, 1000})) {
        REQUIRE(stats.s.has_value());
        CHECK(*stats.s > 0.5);
    }
}
