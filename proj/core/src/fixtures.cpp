#include "seams/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "seams/contrast.hpp"
#include "seams/csv.hpp"
#include "seams/error.hpp"
#include "seams/imageio.hpp"
#include "seams/rng.hpp"

namespace seams {
namespace {

constexpr double kMosaicMin = -0.80;
constexpr double kMosaicMax = 0.68;
constexpr double kCheckerboardBand = -0.97;  // targets at/below this get S = -1
constexpr double kNoiseBand = 0.03;          // |target| <= this gets the noise field

// L*(gray) for the 256 gray levels; strictly increasing.
const std::array<double, 256>& gray_l_table() {
    static const std::array<double, 256> table = [] {
        std::array<double, 256> t{};
        for (int g = 0; g < 256; ++g) {
            const auto u8 = static_cast<std::uint8_t>(g);
            t[static_cast<std::size_t>(g)] = srgb_to_lab({u8, u8, u8}).l;
        }
        return t;
    }();
    return table;
}

std::uint8_t nearest_gray(double l_star) {
    const auto& t = gray_l_table();
    const auto it = std::lower_bound(t.begin(), t.end(), l_star);
    if (it == t.begin()) return 0;
    if (it == t.end()) return 255;
    const std::size_t hi = static_cast<std::size_t>(it - t.begin());
    const std::size_t lo = hi - 1;
    return static_cast<std::uint8_t>(l_star - t[lo] <= t[hi] - l_star ? lo : hi);
}

Srgb8 gray_pixel(double l_star) {
    const std::uint8_t g = nearest_gray(l_star);
    return {g, g, g};
}

double measure_s(const SrgbImage& img) {
    const DistanceStats st = analyze_image(to_lab(img));
    return st.s.value_or(-1.0);
}

// Two-level patch grid (family checkerboard) with an in-patch pixel
// checkerboard of offset `c`; family separation `d` is the bisection knob.
SrgbImage make_mosaic(int w, int h, int patch, double c, double d) {
    const double lo = 50.0 - d / 2.0;
    const double hi = 50.0 + d / 2.0;
    const Srgb8 levels[2][2] = {
        {gray_pixel(lo - c / 2.0), gray_pixel(lo + c / 2.0)},
        {gray_pixel(hi - c / 2.0), gray_pixel(hi + c / 2.0)},
    };
    SrgbImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int family = ((x / patch) + (y / patch)) & 1;
            const int parity = (x + y) & 1;
            img.at(x, y) = levels[family][parity];
        }
    }
    return img;
}

struct MosaicParams {
    int patch;
    double c;
};

MosaicParams mosaic_params_for(double target, int w, int h) {
    const int max_patch = std::max(2, std::min(w, h) / 2);
    MosaicParams p{8, 3.0};
    if (target >= 0.40) p = {32, 0.5};
    else if (target >= 0.25) p = {16, 2.0};
    else if (target >= -0.30) p = {8, 3.0};
    else if (target >= -0.55) p = {16, 3.0};
    else if (target >= -0.70) p = {32, 3.0};
    else p = {48, 3.0};
    p.patch = std::min(p.patch, max_patch);
    return p;
}

SrgbImage make_mosaic_for_target(int w, int h, double target, double tolerance) {
    const MosaicParams params = mosaic_params_for(target, w, h);

    double lo = params.c + 0.15, hi = 88.0;
    SrgbImage best;
    double best_err = 1e9;
    for (int iter = 0; iter < 22; ++iter) {
        const double d = 0.5 * (lo + hi);
        SrgbImage img = make_mosaic(w, h, params.patch, params.c, d);
        const double s = measure_s(img);
        const double err = std::abs(s - target);
        if (err < best_err) {
            best_err = err;
            best = std::move(img);
        }
        if (err <= tolerance * 0.5) break;
        if (s < target) lo = d;
        else hi = d;
    }
    if (best_err > tolerance) {
        throw TargetUnreachable("mosaic could not reach S=" + std::to_string(target) +
                                " (best error " + std::to_string(best_err) + ")");
    }
    return best;
}

SrgbImage make_noise_field(int w, int h, double target, double tolerance, std::uint64_t seed) {
    SrgbImage best;
    double best_err = 1e9;
    // Exponential lightness: |X - Y| of i.i.d. exponentials is exponential,
    // so sigma_d tracks mean_d and S sits near 0. Beta only nudges the
    // clamp/quantization bias.
    for (const double beta : {12.0, 10.0, 14.0, 8.0, 16.0}) {
        SrgbImage img(w, h);
        Rng rng(seed);
        for (auto& px : img.pixels) {
            const double u = rng.unit_double();
            const double l = std::min(-beta * std::log1p(-u), 98.0);
            px = gray_pixel(l);
        }
        const double err = std::abs(measure_s(img) - target);
        if (err < best_err) {
            best_err = err;
            best = std::move(img);
        }
        if (best_err <= tolerance * 0.5) break;
    }
    if (best_err > tolerance) {
        throw TargetUnreachable("noise field could not reach S=" + std::to_string(target));
    }
    return best;
}

double gaussian(Rng& rng) {
    const double u1 = rng.unit_double();
    const double u2 = rng.unit_double();
    return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(6.283185307179586 * u2);
}

void validate_target(double s, const std::string& context) {
    if (s <= kCheckerboardBand) return;
    if (s >= kMosaicMin && s <= kMosaicMax) return;
    throw TargetUnreachable(context + ": target S=" + std::to_string(s) +
                            " outside reachable range [-0.80, 0.68] (or <= -0.97 for the exact "
                            "checkerboard)");
}

}  // namespace

SrgbImage make_checkerboard(int width, int height, Srgb8 a, Srgb8 b) {
    SrgbImage img(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            img.at(x, y) = ((x + y) & 1) ? b : a;
        }
    }
    return img;
}

SrgbImage make_target_image(int width, int height, double target_s, std::uint64_t seed) {
    validate_target(target_s, "make_target_image");
    if (target_s <= kCheckerboardBand) {
        return make_checkerboard(width, height, gray_pixel(40.0), gray_pixel(60.0));
    }
    if (std::abs(target_s) <= kNoiseBand) {
        return make_noise_field(width, height, target_s, 0.05, seed);
    }
    return make_mosaic_for_target(width, height, target_s, 0.05);
}

SrgbImage make_soft_mosaic(int width, int height, int cells_x, int cells_y, double border_frac,
                           double level_spread) {
    if (cells_x < 1 || cells_y < 1 || border_frac <= 0.0 || border_frac >= 1.0) {
        throw DataError("soft mosaic: bad cell grid or border fraction");
    }
    // Trapezoidal square wave with period 2 cells; transitions of relative
    // width border_frac centered on cell boundaries. The product of the two
    // axis waves forms a soft-edged checkerboard whose ramp area fraction is
    // resolution-independent.
    auto trapezoid = [&](double cell_coord) {
        const double p = cell_coord - 2.0 * std::floor(cell_coord / 2.0);  // [0,2)
        const double half = border_frac / 2.0;
        auto ramp = [&](double dist_after_edge, double from, double to) {
            const double t = std::clamp((dist_after_edge + half) / border_frac, 0.0, 1.0);
            return from + (to - from) * t;
        };
        if (p < half) return ramp(p, -1.0, 1.0);           // rising edge at 0
        if (p < 1.0 - half) return 1.0;
        if (p < 1.0 + half) return ramp(p - 1.0, 1.0, -1.0);  // falling edge at 1
        if (p < 2.0 - half) return -1.0;
        return ramp(p - 2.0, -1.0, 1.0);                   // rising edge at 2
    };

    SrgbImage img(width, height);
    for (int y = 0; y < height; ++y) {
        const double wy = trapezoid((y + 0.5) * cells_y / height);
        for (int x = 0; x < width; ++x) {
            const double wx = trapezoid((x + 0.5) * cells_x / width);
            img.at(x, y) = gray_pixel(50.0 + (level_spread / 2.0) * wx * wy);
        }
    }
    return img;
}

FixtureSpec parse_fixture_spec(const std::filesystem::path& json_path) {
    std::ifstream in(json_path);
    if (!in) throw DataError("cannot open fixture spec: " + json_path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("invalid fixture spec json: " + std::string(e.what()));
    }

    FixtureSpec spec;
    spec.image_width = j.value("image_width", 96);
    spec.image_height = j.value("image_height", 96);
    spec.dataset = j.value("dataset", std::string("synthetic"));
    spec.target_tolerance = j.value("target_tolerance", 0.05);
    if (!j.contains("artists") || !j.at("artists").is_array()) {
        throw DataError("fixture spec: missing artists array");
    }
    for (const auto& a : j.at("artists")) {
        FixtureArtist fa;
        fa.id = a.value("id", std::string());
        fa.name = a.value("name", fa.id);
        fa.first_year = a.value("first_year", 1900);
        fa.last_year = a.value("last_year", 1940);
        fa.paintings = a.value("paintings", 10);
        fa.s_start = a.value("s_start", 0.0);
        fa.s_end = a.value("s_end", 0.0);
        fa.s_noise = a.value("s_noise", 0.0);
        fa.technique = a.value("technique", std::string("oil"));
        fa.genre = a.value("genre", std::string("landscape"));
        if (fa.id.empty()) throw DataError("fixture spec: artist without id");
        if (fa.paintings < 1) throw DataError("fixture spec: artist with no paintings");
        if (fa.last_year < fa.first_year) throw DataError("fixture spec: inverted career years");
        spec.artists.push_back(std::move(fa));
    }
    if (spec.artists.empty()) throw DataError("fixture spec: no artists");
    return spec;
}

FixtureResult generate_synthetic_corpus(const FixtureSpec& spec, std::uint64_t seed,
                                        const std::filesystem::path& out_dir) {
    for (const FixtureArtist& a : spec.artists) {
        validate_target(a.s_start, "artist " + a.id);
        validate_target(a.s_end, "artist " + a.id);
    }

    std::filesystem::create_directories(out_dir / "images");
    FixtureResult result;
    result.manifest_path = out_dir / "manifest.csv";

    std::ofstream manifest(result.manifest_path, std::ios::trunc);
    if (!manifest) throw DataError("cannot write manifest: " + result.manifest_path.string());
    manifest << "painting_id,artist_id,artist_name,title,year,technique,genre,dataset,file_path\n";

    std::uint64_t painting_index = 0;
    for (const FixtureArtist& artist : spec.artists) {
        for (int i = 0; i < artist.paintings; ++i, ++painting_index) {
            const double t = artist.paintings == 1
                                 ? 0.0
                                 : static_cast<double>(i) / (artist.paintings - 1);
            const int year = artist.first_year +
                             static_cast<int>(std::llround(t * (artist.last_year - artist.first_year)));

            const std::uint64_t child = derive_seed(seed, painting_index);
            double target = artist.s_start + t * (artist.s_end - artist.s_start);
            if (artist.s_noise > 0.0 && target > kCheckerboardBand) {
                Rng noise_rng(derive_seed(child, 1));
                target += artist.s_noise * gaussian(noise_rng);
                target = std::clamp(target, kMosaicMin + 0.02, kMosaicMax - 0.02);
            }

            const SrgbImage img =
                make_target_image(spec.image_width, spec.image_height, target, derive_seed(child, 2));
            if (target > kCheckerboardBand) {
                result.max_target_error =
                    std::max(result.max_target_error, std::abs(measure_s(img) - target));
            }

            const std::string painting_id = artist.id + "_" + std::to_string(i);
            const std::string rel = "images/" + painting_id + ".png";
            write_png(out_dir / rel, img);
            result.images_written += 1;

            manifest << painting_id << ',' << artist.id << ',' << csv_escape(artist.name) << ','
                     << csv_escape(artist.name + " no. " + std::to_string(i)) << ',' << year << ','
                     << artist.technique << ',' << artist.genre << ',' << spec.dataset << ','
                     << rel << '\n';
        }
    }
    return result;
}

}  // namespace seams
