#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "seams/error.hpp"
#include "seams/rng.hpp"
#include "seams/stats.hpp"

using namespace seams;

namespace {

std::pair<double, double> two_pass_reference(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    const double mean = sum / static_cast<double>(v.size());
    double m2 = 0.0;
    for (double x : v) m2 += (x - mean) * (x - mean);
    return {mean, m2 / static_cast<double>(v.size())};
}

}  // namespace

TEST_CASE("moment accumulator is an exact multiset function") {
    Rng rng(11);
    std::vector<double> values;
    for (int i = 0; i < 5000; ++i) values.push_back(rng.unit_double() * 300.0);

    MomentAccumulator forward;
    for (double v : values) forward.add(v);

    std::vector<double> shuffled = values;
    Rng shuffler(99);
    for (int round = 0; round < 5; ++round) {
        shuffler.shuffle(shuffled);
        MomentAccumulator acc;
        for (double v : shuffled) acc.add(v);
        // bitwise identical, not approximately equal
        CHECK(acc.mean() == forward.mean());
        CHECK(acc.variance() == forward.variance());
    }
}

TEST_CASE("constant stream has exactly zero variance") {
    MomentAccumulator acc;
    const double c = 13.73205080756887;
    for (int i = 0; i < 10001; ++i) acc.add(c);
    CHECK(acc.variance() == 0.0);
    CHECK(acc.stddev() == 0.0);
    CHECK(acc.mean() == doctest::Approx(c).epsilon(1e-12));
}

TEST_CASE("streaming moments match a two-pass reference within 1e-9 relative") {
    Rng rng(42);
    std::vector<double> values;
    values.reserve(1000000);
    for (int i = 0; i < 1000000; ++i) {
        values.push_back(-5.0 * std::log1p(-rng.unit_double()) + 0.5);
    }
    MomentAccumulator acc;
    for (double v : values) acc.add(v);
    const auto [ref_mean, ref_var] = two_pass_reference(values);
    CHECK(std::abs(acc.mean() - ref_mean) / ref_mean < 1e-9);
    CHECK(std::abs(acc.stddev() - std::sqrt(ref_var)) / std::sqrt(ref_var) < 1e-9);
}

TEST_CASE("moment accumulator domain guards") {
    MomentAccumulator acc;
    CHECK_THROWS_AS(acc.mean(), EmptyStream);
    CHECK_THROWS_AS(acc.add(-1.0), InternalError);
    CHECK_THROWS_AS(acc.add(512.0), InternalError);
    CHECK_THROWS_AS(acc.add(std::nan("")), InternalError);
}

TEST_CASE("ols recovers exact lines") {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 7; ++i) pts.emplace_back(i, 3.0 * i + 1.0);
    const OlsFit fit = ols(pts);
    CHECK(std::abs(fit.slope - 3.0) < 1e-12);
    CHECK(std::abs(fit.intercept - 1.0) < 1e-12);
    CHECK(fit.n == 7);
}

TEST_CASE("ols of constant y is zero slope") {
    std::vector<std::pair<double, double>> pts{{0, 2}, {1, 2}, {5, 2}};
    CHECK(ols(pts).slope == 0.0);
}

TEST_CASE("ols matches a hand-computed five-point fit") {
    // mean x = 2, mean y = 2.8, cov_sum = 9, var_sum = 10 -> slope 0.9
    std::vector<std::pair<double, double>> pts{{0, 1}, {1, 2}, {2, 2}, {3, 5}, {4, 4}};
    const OlsFit fit = ols(pts);
    CHECK(std::abs(fit.slope - 0.9) < 1e-12);
    CHECK(std::abs(fit.intercept - 1.0) < 1e-12);
}

TEST_CASE("ols rejects degenerate abscissae") {
    std::vector<std::pair<double, double>> pts{{2, 1}, {2, 3}, {2, 5}};
    CHECK_THROWS_AS(ols(pts), DegenerateAbscissae);
    std::vector<std::pair<double, double>> one{{2, 1}};
    CHECK_THROWS_AS(ols(one), EmptySample);
}

TEST_CASE("ols slope invariances") {
    Rng rng(7);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 50; ++i) {
        pts.emplace_back(rng.unit_double() * 10.0, rng.unit_double() * 4.0 - 2.0);
    }
    const double base = ols(pts).slope;

    std::vector<std::pair<double, double>> shifted = pts;
    for (auto& [x, y] : shifted) {
        x += 100.0;
        y += 55.0;
    }
    CHECK(ols(shifted).slope == doctest::Approx(base).epsilon(1e-9));

    std::vector<std::pair<double, double>> scaled = pts;
    for (auto& [x, y] : scaled) x *= 4.0;
    CHECK(ols(scaled).slope == doctest::Approx(base / 4.0).epsilon(1e-9));
}

namespace {

// O(n^2) oracle: evaluate CDF gaps at every pooled sample value.
double ks_brute_force(std::vector<double> a, std::vector<double> b) {
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    double best = 0.0;
    for (double v : pooled) {
        const auto count_le = [v](const std::vector<double>& s) {
            std::size_t c = 0;
            for (double x : s) {
                if (x <= v) ++c;
            }
            return static_cast<double>(c);
        };
        best = std::max(best, std::abs(count_le(a) / static_cast<double>(a.size()) -
                                       count_le(b) / static_cast<double>(b.size())));
    }
    return best;
}

}  // namespace

TEST_CASE("ks statistic trivial cases") {
    std::vector<double> a{1.0, 2.0, 3.0};
    CHECK(ks_two_sample(a, a).statistic == 0.0);

    std::vector<double> lo{0.1, 0.5, 0.9};
    std::vector<double> hi{2.1, 2.5, 2.9, 2.95};
    CHECK(ks_two_sample(lo, hi).statistic == 1.0);

    CHECK_THROWS_AS(ks_two_sample({}, a), EmptySample);
}

TEST_CASE("ks statistic equals the brute-force sup, including ties") {
    Rng rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t na = 1 + static_cast<std::size_t>(rng.below(50));
        const std::size_t nb = 1 + static_cast<std::size_t>(rng.below(50));
        std::vector<double> a, b;
        for (std::size_t i = 0; i < na; ++i) {
            a.push_back(static_cast<double>(rng.below(20)) / 4.0);  // heavy ties
        }
        for (std::size_t i = 0; i < nb; ++i) {
            b.push_back(static_cast<double>(rng.below(20)) / 4.0);
        }
        CHECK(ks_two_sample(a, b).statistic == ks_brute_force(a, b));
    }
}

TEST_CASE("ks p-value is monotone decreasing in the statistic") {
    // fixed sizes, statistic forced by shifting one sample
    std::vector<double> a, b;
    for (int i = 0; i < 40; ++i) a.push_back(i);
    double prev_p = 1.1;
    for (double shift : {0.0, 5.0, 10.0, 20.0, 30.0, 40.0}) {
        b.clear();
        for (int i = 0; i < 40; ++i) b.push_back(i + shift);
        const KsResult r = ks_two_sample(a, b);
        CHECK(r.p_value <= prev_p);
        prev_p = r.p_value;
    }
}

TEST_CASE("ks is invariant under strictly monotone transforms") {
    Rng rng(5);
    std::vector<double> a, b;
    for (int i = 0; i < 30; ++i) a.push_back(rng.unit_double() * 3.0);
    for (int i = 0; i < 45; ++i) b.push_back(rng.unit_double() * 3.0 + 0.4);
    const double base = ks_two_sample(a, b).statistic;
    for (double& x : a) x = std::exp(x);
    for (double& x : b) x = std::exp(x);
    CHECK(ks_two_sample(a, b).statistic == base);
}

TEST_CASE("pearson basics") {
    std::vector<std::pair<double, double>> inc{{0, 0}, {1, 2}, {2, 4}, {3, 6}};
    CHECK(pearson(inc) == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<std::pair<double, double>> dec{{0, 0}, {1, -1}, {2, -2}};
    CHECK(pearson(dec) == doctest::Approx(-1.0).epsilon(1e-12));

    // hand computation: r = 15.5 / 17.5 = 31/35
    std::vector<std::pair<double, double>> six{{0, 1}, {1, 3}, {2, 2}, {3, 5}, {4, 4}, {5, 6}};
    CHECK(std::abs(pearson(six) - 31.0 / 35.0) < 1e-12);

    std::vector<std::pair<double, double>> flat{{0, 1}, {1, 1}, {2, 1}};
    CHECK_THROWS_AS(pearson(flat), ZeroVariance);
}

TEST_CASE("pearson bounded and affine-invariant") {
    Rng rng(31);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 80; ++i) {
        pts.emplace_back(rng.unit_double(), rng.unit_double());
    }
    const double base = pearson(pts);
    CHECK(base >= -1.0);
    CHECK(base <= 1.0);
    for (auto& [x, y] : pts) {
        x = 3.0 * x + 7.0;
        y = 0.5 * y - 2.0;
    }
    CHECK(pearson(pts) == doctest::Approx(base).epsilon(1e-9));
}

TEST_CASE("zscore basics") {
    std::vector<double> pop{0.0, 10.0};
    CHECK(zscore(5.0, pop) == 0.0);
    CHECK(zscore(10.0, pop) == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<double> same{3.0, 3.0, 3.0};
    CHECK_THROWS_AS(zscore(1.0, same), ZeroSpread);
}

TEST_CASE("zscore matches a two-pass reference and is affine-invariant") {
    Rng rng(77);
    std::vector<double> pop;
    for (int i = 0; i < 30; ++i) pop.push_back(rng.unit_double() * 9.0 - 3.0);
    const double probe = 1.25;

    const auto [mean, var] = two_pass_reference(pop);
    const double expected = (probe - mean) / std::sqrt(var);
    CHECK(std::abs(zscore(probe, pop) - expected) < 1e-12);

    std::vector<double> transformed = pop;
    for (double& v : transformed) v = 2.5 * v + 11.0;
    CHECK(zscore(2.5 * probe + 11.0, transformed) == doctest::Approx(expected).epsilon(1e-9));
}
