#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "seams/contrast.hpp"
#include "seams/error.hpp"
#include "seams/fixtures.hpp"
#include "seams/imageio.hpp"
#include "seams/manifest.hpp"

using namespace seams;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("seams_fix_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double measured_s(const SrgbImage& img) {
    const DistanceStats st = analyze_image(to_lab(img));
    REQUIRE(st.s.has_value());
    return *st.s;
}

}  // namespace

TEST_CASE("target -1 produces an exact two-color checkerboard") {
    const SrgbImage img = make_target_image(64, 64, -1.0, 9);
    const DistanceStats st = analyze_image(to_lab(img));
    REQUIRE(st.s.has_value());
    CHECK(*st.s == -1.0);
    // exactly two colors, alternating
    CHECK(img.at(0, 0) != img.at(1, 0));
    CHECK(img.at(0, 0) == img.at(1, 1));
}

TEST_CASE("targets across the reachable range land within 0.05") {
    for (double target : {-0.75, -0.6, -0.4, -0.15, 0.0, 0.1, 0.3, 0.5, 0.65}) {
        CAPTURE(target);
        const SrgbImage img = make_target_image(96, 96, target, 31);
        CHECK(std::abs(measured_s(img) - target) <= 0.05);
    }
}

TEST_CASE("noise style sits near zero seamlessness") {
    const SrgbImage img = make_target_image(128, 128, 0.0, 77);
    CHECK(std::abs(measured_s(img)) <= 0.05);
}

TEST_CASE("unreachable targets throw") {
    CHECK_THROWS_AS(make_target_image(96, 96, 0.9, 1), TargetUnreachable);
    CHECK_THROWS_AS(make_target_image(96, 96, -0.9, 1), TargetUnreachable);
    CHECK_THROWS_AS(make_target_image(96, 96, 1.5, 1), TargetUnreachable);
}

TEST_CASE("soft mosaic produces a defined mid-range s") {
    const SrgbImage img = make_soft_mosaic(320, 240, 6, 4, 0.15, 60.0);
    const double s = measured_s(img);
    CHECK(s > -1.0);
    CHECK(s < 1.0);
    CHECK_THROWS_AS(make_soft_mosaic(100, 100, 0, 4, 0.1, 50.0), DataError);
}

TEST_CASE("generated corpus is deterministic and loadable") {
    FixtureSpec spec;
    spec.image_width = 64;
    spec.image_height = 64;
    FixtureArtist a;
    a.id = "artist_a";
    a.name = "Artist A";
    a.first_year = 1900;
    a.last_year = 1930;
    a.paintings = 6;
    a.s_start = -0.3;
    a.s_end = 0.4;
    a.s_noise = 0.02;
    spec.artists.push_back(a);
    FixtureArtist b = a;
    b.id = "artist_b";
    b.name = "Artist B";
    b.s_start = 0.2;
    b.s_end = 0.2;
    b.technique = "tempera";
    b.genre = "portrait";
    spec.artists.push_back(b);

    const fs::path dir1 = fresh_dir("gen1");
    const FixtureResult r1 = generate_synthetic_corpus(spec, 42, dir1);
    CHECK(r1.images_written == 12);
    CHECK(r1.max_target_error <= 0.05);

    const ManifestData manifest = load_manifest(r1.manifest_path);
    REQUIRE(manifest.records.size() == 12);
    CHECK(manifest.issues.empty());
    for (const auto& rec : manifest.records) {
        const SrgbImage img = decode_image(dir1 / rec.file_path);
        CHECK(img.width == 64);
        CHECK(rec.year >= 1900);
        CHECK(rec.year <= 1930);
    }

    // same spec and seed: byte-identical outputs
    const fs::path dir2 = fresh_dir("gen2");
    generate_synthetic_corpus(spec, 42, dir2);
    CHECK(slurp(dir1 / "manifest.csv") == slurp(dir2 / "manifest.csv"));
    for (const auto& rec : manifest.records) {
        CHECK(slurp(dir1 / rec.file_path) == slurp(dir2 / rec.file_path));
    }

    // different seed: different pixels somewhere
    const fs::path dir3 = fresh_dir("gen3");
    generate_synthetic_corpus(spec, 43, dir3);
    bool any_diff = false;
    for (const auto& rec : manifest.records) {
        if (slurp(dir1 / rec.file_path) != slurp(dir3 / rec.file_path)) any_diff = true;
    }
    CHECK(any_diff);
}

TEST_CASE("fixture spec json parsing and validation") {
    const fs::path dir = fresh_dir("specjson");
    {
        std::ofstream out(dir / "spec.json");
        out << R"({
  "image_width": 48, "image_height": 32, "dataset": "demo",
  "artists": [
    {"id": "x", "first_year": 1850, "last_year": 1900, "paintings": 3,
     "s_start": -0.2, "s_end": 0.3, "technique": "oil", "genre": "portrait"}
  ]
})";
    }
    const FixtureSpec spec = parse_fixture_spec(dir / "spec.json");
    CHECK(spec.image_width == 48);
    CHECK(spec.artists.size() == 1);
    CHECK(spec.artists[0].paintings == 3);

    {
        std::ofstream out(dir / "bad.json");
        out << R"({"artists": []})";
    }
    CHECK_THROWS_AS(parse_fixture_spec(dir / "bad.json"), DataError);

    {
        std::ofstream out(dir / "far.json");
        out << R"({"artists": [{"id":"x","s_start":0.9,"s_end":0.9}]})";
    }
    const FixtureSpec far = parse_fixture_spec(dir / "far.json");
    CHECK_THROWS_AS(generate_synthetic_corpus(far, 1, fresh_dir("far_out")), TargetUnreachable);
}
