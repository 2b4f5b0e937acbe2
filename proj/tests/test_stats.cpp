#include <cmath>

#include "cpzeros/rng.hpp"
#include "cpzeros/stats.hpp"
#include "doctest.h"

using namespace cpzeros;

TEST_CASE("wilson interval frozen values") {
    // reference values computed with 40-digit arithmetic
    const Interval a = wilson_interval(0, 100);
    CHECK(a.lo == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(a.hi == doctest::Approx(0.03699349820698568).epsilon(1e-12));
    const Interval b = wilson_interval(5, 100);
    CHECK(b.lo == doctest::Approx(0.021543679154367973).epsilon(1e-12));
    CHECK(b.hi == doctest::Approx(0.11175046923191914).epsilon(1e-12));
    const Interval c = wilson_interval(800000, 1000000);
    CHECK(c.lo == doctest::Approx(0.7992148626317639).epsilon(1e-12));
    CHECK(c.hi == doctest::Approx(0.8007828325017978).epsilon(1e-12));
}

TEST_CASE("wilson coverage on synthetic bernoulli streams") {
    // 1000 repetitions of n=200 draws at p=0.3: nominal 95%, demand >= 93%
    const double p = 0.3;
    int covered = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        BernoulliCounter c;
        for (int i = 0; i < 200; ++i)
            c.add(rng::uniform_pair(4242, rep, i).half_open < p);
        const Interval iv = c.wilson();
        if (iv.lo <= p && p <= iv.hi) ++covered;
    }
    CHECK(covered >= 930);
}

TEST_CASE("streaming counter merge equals one pass") {
    BernoulliCounter whole, left, right;
    for (int i = 0; i < 1000; ++i) {
        const bool hit = rng::uniform_pair(9, 0, i).half_open < 0.2;
        whole.add(hit);
        (i < 400 ? left : right).add(hit);
    }
    left.merge(right);
    CHECK(left.trials == whole.trials);
    CHECK(left.hits == whole.hits);
    CHECK(left.p_hat() == whole.p_hat());
}

TEST_CASE("fit_rate recovers a synthetic N^2 law exactly") {
    std::vector<TailPoint> pts;
    for (int N : {4, 6, 8, 10, 12}) {
        TailPoint t;
        t.N = N;
        t.trials = 1;
        t.p_hat = std::exp(-0.03 * N * N);
        pts.push_back(t);
    }
    const RateFit f = fit_rate(pts, 2);
    CHECK(f.slope == doctest::Approx(0.03).epsilon(1e-6));
    CHECK(f.intercept == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(f.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit_rate flags model mismatch through the R^2 gap") {
    std::vector<TailPoint> pts;
    for (int N : {4, 8, 12, 16, 20}) {
        TailPoint t;
        t.N = N;
        t.trials = 1;
        t.p_hat = std::exp(-1.0 * N);  // pure exponential
        pts.push_back(t);
    }
    const RateFit f = fit_rate(pts, 2);
    CHECK(f.alt_r2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.r2 < f.alt_r2);
    CHECK(f.r2_gap() < 0.0);
}

TEST_CASE("fit_rate needs three uncensored points") {
    std::vector<TailPoint> pts(2);
    pts[0] = {4, 10, 5, 0.5, 0.2, 0.8, false};
    pts[1] = {6, 10, 2, 0.2, 0.05, 0.5, false};
    CHECK_THROWS_AS(fit_rate(pts, 2), ValidationError);
    TailPoint censored{8, 10, 0, 0.0, 0.0, 0.3, true};
    pts.push_back(censored);
    CHECK_THROWS_AS(fit_rate(pts, 2), ValidationError);
}
