#include "seams/robustness.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "seams/error.hpp"

namespace seams {
namespace {

// Black-body chart, 1000 K to 10000 K in 100 K rows (8-bit sRGB, the
// white-anchored normalization where the maximum channel saturates at 255).
// 1500 K row (255, 109, 0) is the reference anchor.
struct BbRow {
    std::uint8_t r, g, b;
};

constexpr int kTableMinK = 1000;
constexpr int kTableStepK = 100;

constexpr std::array<BbRow, 91> kBlackbodyTable = {{
    {255, 56, 0},    // 1000 K
    {255, 71, 0},    {255, 83, 0},    {255, 93, 0},    {255, 101, 0},
    {255, 109, 0},   // 1500 K
    {255, 115, 0},   {255, 121, 0},   {255, 126, 0},   {255, 131, 0},
    {255, 138, 18},  // 2000 K
    {255, 142, 33},  {255, 147, 44},  {255, 152, 54},  {255, 157, 63},
    {255, 161, 72},  {255, 165, 79},  {255, 169, 87},  {255, 173, 94},
    {255, 177, 101},
    {255, 180, 107},  // 3000 K
    {255, 184, 114}, {255, 187, 120}, {255, 190, 126}, {255, 193, 132},
    {255, 196, 137}, {255, 199, 143}, {255, 201, 148}, {255, 204, 153},
    {255, 206, 159},
    {255, 209, 163},  // 4000 K
    {255, 211, 168}, {255, 213, 173}, {255, 215, 177}, {255, 217, 182},
    {255, 219, 186}, {255, 221, 190}, {255, 223, 194}, {255, 225, 198},
    {255, 227, 202},
    {255, 228, 206},  // 5000 K
    {255, 230, 210}, {255, 232, 213}, {255, 233, 217}, {255, 235, 220},
    {255, 236, 224}, {255, 238, 227}, {255, 239, 230}, {255, 240, 233},
    {255, 242, 236},
    {255, 243, 239},  // 6000 K
    {255, 244, 242}, {255, 245, 245}, {255, 246, 247}, {255, 248, 251},
    {255, 249, 253},  // 6500 K
    {254, 249, 255}, {252, 247, 255}, {249, 246, 255}, {247, 245, 255},
    {245, 243, 255},  // 7000 K
    {243, 242, 255}, {240, 241, 255}, {239, 240, 255}, {237, 239, 255},
    {235, 238, 255}, {233, 237, 255}, {231, 236, 255}, {230, 235, 255},
    {228, 234, 255},
    {227, 233, 255},  // 8000 K
    {225, 232, 255}, {224, 231, 255}, {222, 230, 255}, {221, 230, 255},
    {220, 229, 255}, {218, 228, 255}, {217, 227, 255}, {216, 227, 255},
    {215, 226, 255},
    {214, 225, 255},  // 9000 K
    {212, 225, 255}, {211, 224, 255}, {210, 223, 255}, {209, 223, 255},
    {208, 222, 255}, {207, 221, 255}, {206, 221, 255}, {205, 220, 255},
    {205, 219, 255},
    {204, 219, 255},  // 10000 K
}};

std::uint8_t round_channel(double v) {
    return static_cast<std::uint8_t>(std::clamp<long>(std::llround(v), 0, 255));
}

// Catmull-Rom weights for taps at offsets -1,0,1,2 relative to floor(src),
// fraction t in [0,1).
std::array<double, 4> cubic_weights(double t) {
    const double t2 = t * t;
    const double t3 = t2 * t;
    return {
        0.5 * (-t + 2.0 * t2 - t3),
        0.5 * (2.0 - 5.0 * t2 + 3.0 * t3),
        0.5 * (t + 4.0 * t2 - 3.0 * t3),
        0.5 * (-t2 + t3),
    };
}

// One separable pass over a channel plane: length `in_n` lines resampled to
// `out_n`, stride-aware so it serves both directions.
void resample_lines(const double* src, int in_n, int line_count, int in_stride, int line_stride,
                    double* dst, int out_n, int out_stride, int dst_line_stride) {
    const double scale = static_cast<double>(in_n) / out_n;
    for (int i = 0; i < out_n; ++i) {
        const double s = (i + 0.5) * scale - 0.5;
        const int base = static_cast<int>(std::floor(s));
        const auto w = cubic_weights(s - base);
        int idx[4];
        for (int k = 0; k < 4; ++k) {
            idx[k] = std::clamp(base - 1 + k, 0, in_n - 1);
        }
        for (int line = 0; line < line_count; ++line) {
            const double* in = src + static_cast<std::ptrdiff_t>(line) * line_stride;
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) {
                acc += w[static_cast<std::size_t>(k)] * in[static_cast<std::ptrdiff_t>(idx[k]) * in_stride];
            }
            dst[static_cast<std::ptrdiff_t>(line) * dst_line_stride +
                static_cast<std::ptrdiff_t>(i) * out_stride] = acc;
        }
    }
}

}  // namespace

Srgb8 blackbody_rgb(double kelvin) {
    if (!(kelvin >= kTableMinK) || kelvin > kTableMinK + kTableStepK * (kBlackbodyTable.size() - 1)) {
        throw OutOfRange("color temperature outside [1000, 10000] K");
    }
    const double pos = (kelvin - kTableMinK) / kTableStepK;
    const std::size_t i0 = std::min(static_cast<std::size_t>(pos), kBlackbodyTable.size() - 2);
    const double t = pos - static_cast<double>(i0);
    const BbRow& a = kBlackbodyTable[i0];
    const BbRow& b = kBlackbodyTable[i0 + 1];
    return {round_channel(a.r + t * (b.r - a.r)), round_channel(a.g + t * (b.g - a.g)),
            round_channel(a.b + t * (b.b - a.b))};
}

TemperatureFactor temperature_factor(double kelvin) {
    const Srgb8 c = blackbody_rgb(kelvin);
    return {kelvin, c.r / 255.0, c.g / 255.0, c.b / 255.0};
}

SrgbImage apply_temperature(const SrgbImage& img, double kelvin) {
    const TemperatureFactor f = temperature_factor(kelvin);
    SrgbImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const Srgb8& px = img.pixels[i];
        out.pixels[i] = {round_channel(px.r * f.factor_r), round_channel(px.g * f.factor_g),
                         round_channel(px.b * f.factor_b)};
    }
    return out;
}

SrgbImage resize_bicubic(const SrgbImage& img, int target) {
    if (target < 2) throw InvalidTarget("resize target must be >= 2");
    if (img.width < 1 || img.height < 1) throw EmptyImage();

    int out_w, out_h;
    if (img.width >= img.height) {
        out_w = target;
        out_h = std::max(1, static_cast<int>(std::llround(
                                static_cast<double>(img.height) * target / img.width)));
    } else {
        out_h = target;
        out_w = std::max(1, static_cast<int>(std::llround(
                                static_cast<double>(img.width) * target / img.height)));
    }

    const int w = img.width, h = img.height;
    std::vector<double> plane(static_cast<std::size_t>(w) * h);
    std::vector<double> mid(static_cast<std::size_t>(out_w) * h);
    std::vector<double> done(static_cast<std::size_t>(out_w) * out_h);
    SrgbImage out(out_w, out_h);

    for (int c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < img.pixels.size(); ++i) {
            const Srgb8& px = img.pixels[i];
            plane[i] = c == 0 ? px.r : (c == 1 ? px.g : px.b);
        }
        // horizontal: each of h rows w -> out_w
        resample_lines(plane.data(), w, h, 1, w, mid.data(), out_w, 1, out_w);
        // vertical: each of out_w columns h -> out_h
        resample_lines(mid.data(), h, out_w, out_w, 1, done.data(), out_h, out_w, 1);
        for (std::size_t i = 0; i < done.size(); ++i) {
            auto& px = out.pixels[i];
            const std::uint8_t v = round_channel(done[i]);
            if (c == 0) px.r = v;
            else if (c == 1) px.g = v;
            else px.b = v;
        }
    }
    return out;
}

std::vector<std::pair<double, DistanceStats>> temperature_sweep(const SrgbImage& img,
                                                                std::span<const double> kelvins) {
    if (kelvins.empty()) throw DataError("temperature sweep: empty grid");
    std::vector<std::pair<double, DistanceStats>> out;
    out.reserve(kelvins.size());
    for (double k : kelvins) {
        out.emplace_back(k, analyze_image(to_lab(apply_temperature(img, k))));
    }
    return out;
}

std::vector<std::pair<int, DistanceStats>> size_sweep(const SrgbImage& img,
                                                      std::span<const int> widths) {
    if (widths.empty()) throw DataError("size sweep: empty grid");
    std::vector<std::pair<int, DistanceStats>> out;
    out.reserve(widths.size());
    for (int w : widths) {
        out.emplace_back(w, analyze_image(to_lab(resize_bicubic(img, w))));
    }
    return out;
}

std::vector<double> default_temperature_grid() {
    std::vector<double> grid;
    for (int k = 1500; k <= 10000; k += 850) grid.push_back(k);
    return grid;
}

std::vector<int> default_width_grid() {
    std::vector<int> grid;
    for (int w = 100; w <= 1500; w += 100) grid.push_back(w);
    return grid;
}

}  // namespace seams
