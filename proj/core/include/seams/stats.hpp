#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace seams {

// Single-pass streaming mean/variance over nonnegative values.
//
// Values are quantized to a 2^-40 grid and accumulated as 128-bit integers,
// so the moments are exact up to the input quantization: order-independent
// (a multiset function of the stream, required for the dihedral-symmetry
// guarantees of image analysis), free of cancellation (the variance
// numerator n*sum(q^2) - (sum q)^2 is formed in 256-bit integer arithmetic),
// and exactly zero variance for constant streams.
//
// Domain: 0 <= x < 512, finite; at most 2^29 samples. Both are enforced.
// Quantization error on the mean is below 2^-41, far inside the 1e-9
// relative agreement contract with a two-pass reference.
class MomentAccumulator {
public:
    void add(double x);

    std::uint64_t count() const { return n_; }
    double mean() const;
    double variance() const;  // population
    double stddev() const;    // population

private:
    std::uint64_t n_ = 0;
    unsigned __int128 sum_q_ = 0;
    unsigned __int128 sum_q2_ = 0;
};

struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::uint64_t n = 0;
};

// Ordinary least squares y = slope*x + intercept; slope = cov(x,y)/var(x).
// Throws DegenerateAbscissae when all x are equal, EmptySample on n < 2.
OlsFit ols(std::span<const std::pair<double, double>> points);

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

// Two-sample Kolmogorov-Smirnov. Statistic is the sup gap between empirical
// CDFs, evaluated at every distinct pooled value (ties advance both sides).
// P-value from the asymptotic Kolmogorov series Q(lambda) with
// lambda = sqrt(na*nb/(na+nb)) * statistic, terms truncated below 1e-16.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

// Product-moment correlation; throws ZeroVariance when either coordinate has
// no spread, EmptySample on n < 2.
double pearson(std::span<const std::pair<double, double>> points);

// (x - mean)/stddev with population stddev; throws ZeroSpread / EmptySample.
double zscore(double x, std::span<const double> population);

// Two-pass population mean/stddev. Identical values yield stddev exactly 0.
std::pair<double, double> mean_stddev(std::span<const double> values);

}  // namespace seams
