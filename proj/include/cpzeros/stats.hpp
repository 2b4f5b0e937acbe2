#pragma once

// Estimator utilities: Wilson score intervals for Bernoulli streams and the
// two-exponent least-squares fits of -log p against N^k.

#include <cstdint>
#include <span>
#include <vector>

#include "cpzeros/common.hpp"

namespace cpzeros {

struct Interval {
    double lo = 0.0, hi = 1.0;
};

// Wilson 95% score interval (z = 1.959963984540054 unless overridden).
Interval wilson_interval(std::int64_t hits, std::int64_t trials, double z = 1.959963984540054);

// Streaming Bernoulli estimator; adding hit-counts in any order gives the
// same state, so one-pass and replayed-from-records results are bit-equal.
struct BernoulliCounter {
    std::int64_t trials = 0;
    std::int64_t hits = 0;

    void add(bool hit) {
        ++trials;
        hits += hit ? 1 : 0;
    }
    void merge(const BernoulliCounter& o) {
        trials += o.trials;
        hits += o.hits;
    }
    double p_hat() const { return trials > 0 ? static_cast<double>(hits) / trials : 0.0; }
    Interval wilson() const { return wilson_interval(hits, trials); }
};

struct TailPoint {
    int N = 0;
    std::int64_t trials = 0;
    std::int64_t hits = 0;
    double p_hat = 0.0;
    double ci_lo = 0.0, ci_hi = 1.0;
    bool censored = false;  // zero hits observed

    static TailPoint from_counter(int N, const BernoulliCounter& c);
};

struct RateFit {
    int exponent = 2;  // m+1
    double slope = 0.0, intercept = 0.0, r2 = 0.0;
    double alt_slope = 0.0, alt_intercept = 0.0, alt_r2 = 0.0;  // exponent-1 fit
    int points_used = 0;

    double r2_gap() const { return r2 - alt_r2; }
};

// Least squares of -log p_hat on N^exponent (uncensored points with p>0
// only); also fits the pure-exponential alternative (power 1).  Throws
// ValidationError with fewer than 3 usable points.
RateFit fit_rate(std::span<const TailPoint> points, int exponent);

// y on x with intercept; returns (slope, intercept, r2)
std::array<double, 3> least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace cpzeros
