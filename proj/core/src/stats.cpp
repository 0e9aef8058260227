#include "seams/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "seams/error.hpp"

namespace seams {
namespace {

using u128 = unsigned __int128;

struct U256 {
    u128 hi = 0;
    u128 lo = 0;
};

U256 mul_u128(u128 a, u128 b) {
    const u128 mask = (u128(1) << 64) - 1;
    const u128 a0 = a & mask, a1 = a >> 64;
    const u128 b0 = b & mask, b1 = b >> 64;

    const u128 p00 = a0 * b0;
    const u128 p01 = a0 * b1;
    const u128 p10 = a1 * b0;
    const u128 p11 = a1 * b1;

    u128 mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
    U256 r;
    r.lo = (p00 & mask) | (mid << 64);
    r.hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    return r;
}

// a - b, caller guarantees a >= b.
U256 sub_u256(U256 a, U256 b) {
    U256 r;
    r.lo = a.lo - b.lo;
    r.hi = a.hi - b.hi - (a.lo < b.lo ? 1 : 0);
    return r;
}

double u128_to_double(u128 v) {
    return std::ldexp(static_cast<double>(static_cast<std::uint64_t>(v >> 64)), 64) +
           static_cast<double>(static_cast<std::uint64_t>(v));
}

double u256_to_double(U256 v) {
    return std::ldexp(u128_to_double(v.hi), 128) + u128_to_double(v.lo);
}

constexpr double kQuantScale = 0x1.0p40;
constexpr double kMaxValue = 512.0;
constexpr std::uint64_t kMaxCount = 1ULL << 29;

}  // namespace

void MomentAccumulator::add(double x) {
    if (!(x >= 0.0) || x >= kMaxValue) {
        throw InternalError("moment accumulator: value outside [0, 512)");
    }
    if (n_ >= kMaxCount) {
        throw InternalError("moment accumulator: sample count limit exceeded");
    }
    const std::uint64_t q = static_cast<std::uint64_t>(std::llround(x * kQuantScale));
    n_ += 1;
    sum_q_ += q;
    sum_q2_ += u128(q) * u128(q);
}

double MomentAccumulator::mean() const {
    if (n_ == 0) throw EmptyStream();
    return u128_to_double(sum_q_) * 0x1.0p-40 / static_cast<double>(n_);
}

double MomentAccumulator::variance() const {
    if (n_ == 0) throw EmptyStream();
    // n*sum(q^2) - (sum q)^2 in exact 256-bit arithmetic: the subtraction
    // cancels exactly, never catastrophically.
    const U256 nsq2 = mul_u128(u128(n_), sum_q2_);
    const U256 sq_sq = mul_u128(sum_q_, sum_q_);
    const U256 m2 = sub_u256(nsq2, sq_sq);
    const double nd = static_cast<double>(n_);
    return u256_to_double(m2) * 0x1.0p-80 / (nd * nd);
}

double MomentAccumulator::stddev() const {
    return std::sqrt(variance());
}

OlsFit ols(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) throw EmptySample();

    double min_x = points[0].first, max_x = points[0].first;
    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : points) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        sx += x;
        sy += y;
    }
    if (min_x == max_x) throw DegenerateAbscissae();

    const double n = static_cast<double>(points.size());
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    OlsFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.n = points.size();
    return fit;
}

namespace {

double kolmogorov_q(double lambda) {
    if (lambda <= 0.0) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100000; ++k) {
        const double term = 2.0 * std::exp(-2.0 * k * k * lambda * lambda);
        if (term < 1e-16) break;
        sum += sign * term;
        sign = -sign;
    }
    return std::clamp(sum, 0.0, 1.0);
}

}  // namespace

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw EmptySample();

    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());

    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double x = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] == x) ++i;
        while (j < sb.size() && sb[j] == x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }

    KsResult r;
    r.statistic = d;
    const double ne = na * nb / (na + nb);
    r.p_value = kolmogorov_q(std::sqrt(ne) * d);
    return r;
}

double pearson(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) throw EmptySample();

    double min_x = points[0].first, max_x = points[0].first;
    double min_y = points[0].second, max_y = points[0].second;
    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : points) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
        sx += x;
        sy += y;
    }
    if (min_x == max_x || min_y == max_y) throw ZeroVariance();

    const double n = static_cast<double>(points.size());
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
        sxy += (x - mx) * (y - my);
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::pair<double, double> mean_stddev(std::span<const double> values) {
    if (values.empty()) throw EmptySample();
    double sum = 0.0;
    double min_v = values[0], max_v = values[0];
    for (double v : values) {
        sum += v;
        min_v = std::min(min_v, v);
        max_v = std::max(max_v, v);
    }
    const double n = static_cast<double>(values.size());
    const double mean = sum / n;
    if (min_v == max_v) return {mean, 0.0};
    double m2 = 0.0;
    for (double v : values) m2 += (v - mean) * (v - mean);
    return {mean, std::sqrt(m2 / n)};
}

double zscore(double x, std::span<const double> population) {
    if (population.size() < 2) throw EmptySample();
    const auto [mean, sd] = mean_stddev(population);
    if (sd == 0.0) throw ZeroSpread();
    return (x - mean) / sd;
}

}  // namespace seams
