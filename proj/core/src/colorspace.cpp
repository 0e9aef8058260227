#include "seams/colorspace.hpp"

#include <array>

namespace seams {
namespace {

// Linear RGB -> XYZ, derived exactly from the sRGB primaries
// R(0.64,0.33) G(0.30,0.60) B(0.15,0.06) and D65 white (0.3127,0.3290).
constexpr double kM[3][3] = {
    {0.4123907992659594813, 0.3575843393838779637, 0.1804807884018342875},
    {0.2126390058715103575, 0.7151686787677559275, 0.0721923153607337150},
    {0.0193308187155918507, 0.1191947797946259879, 0.9505321522496605809},
};
constexpr double kXn = 0.9504559270516717325;  // 0.3127/0.3290
constexpr double kZn = 1.0890577507598784190;  // 0.3583/0.3290

constexpr double kEpsilon = 216.0 / 24389.0;
constexpr double kKappa = 24389.0 / 27.0;

std::array<double, 256> make_linear_table() {
    std::array<double, 256> t{};
    for (int i = 0; i < 256; ++i) {
        const double c = i / 255.0;
        t[i] = c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
    }
    return t;
}

double lab_f(double t) {
    return t > kEpsilon ? std::cbrt(t) : (kKappa * t + 16.0) / 116.0;
}

}  // namespace

LabColor srgb_to_lab(Srgb8 pixel) {
    static const std::array<double, 256> linear = make_linear_table();

    const double r = linear[pixel.r];
    const double g = linear[pixel.g];
    const double b = linear[pixel.b];

    const double x = kM[0][0] * r + kM[0][1] * g + kM[0][2] * b;
    const double y = kM[1][0] * r + kM[1][1] * g + kM[1][2] * b;
    const double z = kM[2][0] * r + kM[2][1] * g + kM[2][2] * b;

    const double fx = lab_f(x / kXn);
    const double fy = lab_f(y);
    const double fz = lab_f(z / kZn);

    return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

}  // namespace seams
