#pragma once

#include <cmath>
#include <cstdint>

namespace seams {

// 8-bit sRGB pixel (IEC 61966-2-1 encoding assumed for all inputs).
struct Srgb8 {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Srgb8&, const Srgb8&) = default;
};

// CIE 1976 L*a*b*, D65 white, 2 degree observer. l is in [0, 100] for any
// in-gamut input; a and b are unbounded in general (|a|,|b| < 130 for colors
// reached from 8-bit sRGB).
struct LabColor {
    double l = 0.0;
    double a = 0.0;
    double b = 0.0;

    friend bool operator==(const LabColor&, const LabColor&) = default;
};

// sRGB -> Lab. Inverse companding, linear RGB -> XYZ with the matrix derived
// exactly from the sRGB primaries and the D65 chromaticity white point
// (0.3127, 0.3290), then XYZ -> Lab with the rational constants 216/24389 and
// 24389/27. Pure and total.
LabColor srgb_to_lab(Srgb8 pixel);

// CIE76 color difference: the Euclidean distance between Lab coordinates.
inline double delta_e(const LabColor& c1, const LabColor& c2) {
    const double dl = c1.l - c2.l;
    const double da = c1.a - c2.a;
    const double db = c1.b - c2.b;
    return std::sqrt(dl * dl + da * da + db * db);
}

}  // namespace seams
