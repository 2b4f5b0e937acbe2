#include "cpzeros/stats.hpp"

#include <cmath>

namespace cpzeros {

Interval wilson_interval(std::int64_t hits, std::int64_t trials, double z) {
    if (trials <= 0) throw ValidationError("wilson_interval: trials must be positive");
    if (hits < 0 || hits > trials) throw ValidationError("wilson_interval: bad hit count");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;
    const double z2 = z * z;
    const double den = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / den;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / den;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

TailPoint TailPoint::from_counter(int N, const BernoulliCounter& c) {
    TailPoint t;
    t.N = N;
    t.trials = c.trials;
    t.hits = c.hits;
    t.p_hat = c.p_hat();
    const Interval iv = c.wilson();
    t.ci_lo = iv.lo;
    t.ci_hi = iv.hi;
    t.censored = (c.hits == 0);
    return t;
}

std::array<double, 3> least_squares(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) throw ValidationError("least_squares: need >= 2 points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw ValidationError("least_squares: degenerate abscissas");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (intercept + slope * x[i]);
        ss_res += r * r;
    }
    const double r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return {slope, intercept, r2};
}

RateFit fit_rate(std::span<const TailPoint> points, int exponent) {
    std::vector<double> xs, x1, ys;
    for (const TailPoint& p : points) {
        if (p.censored || p.p_hat <= 0.0) continue;
        xs.push_back(std::pow(static_cast<double>(p.N), exponent));
        x1.push_back(static_cast<double>(p.N));
        ys.push_back(-std::log(p.p_hat));
    }
    if (xs.size() < 3) throw ValidationError("fit_rate: need >= 3 uncensored points");
    RateFit fit;
    fit.exponent = exponent;
    fit.points_used = static_cast<int>(xs.size());
    const auto main = least_squares(xs, ys);
    fit.slope = main[0];
    fit.intercept = main[1];
    fit.r2 = main[2];
    const auto alt = least_squares(x1, ys);
    fit.alt_slope = alt[0];
    fit.alt_intercept = alt[1];
    fit.alt_r2 = alt[2];
    return fit;
}

}  // namespace cpzeros
