#include <cmath>
#include <set>

#include "cpzeros/rng.hpp"
#include "doctest.h"

using namespace cpzeros;

TEST_CASE("philox draws are deterministic and keyed") {
    const Complex a = rng::standard_complex_gaussian(42, 7, 3);
    const Complex b = rng::standard_complex_gaussian(42, 7, 3);
    CHECK(a == b);
    CHECK(rng::standard_complex_gaussian(42, 7, 4) != a);
    CHECK(rng::standard_complex_gaussian(42, 8, 3) != a);
    CHECK(rng::standard_complex_gaussian(43, 7, 3) != a);
}

TEST_CASE("uniform pair ranges") {
    for (int i = 0; i < 2000; ++i) {
        const rng::UniformPair u = rng::uniform_pair(1, 2, i);
        CHECK(u.open > 0.0);
        CHECK(u.open <= 1.0);
        CHECK(u.half_open >= 0.0);
        CHECK(u.half_open < 1.0);
    }
}

TEST_CASE("complex gaussian moments") {
    const int n = 100000;
    double sum_sq = 0.0;
    Complex sum{0.0, 0.0};
    Complex sum_c2{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const Complex c = rng::standard_complex_gaussian(2024, 0, i);
        sum += c;
        sum_sq += std::norm(c);
        sum_c2 += c * c;
    }
    // E|c|^2 = 1, E c = 0, E c^2 = 0; 3 sigma Monte Carlo bands
    CHECK(sum_sq / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::abs(sum) / n < 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(sum_c2) / n < 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("draws are uncorrelated across indices") {
    const int n = 50000;
    Complex acc{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const Complex a = rng::standard_complex_gaussian(5, 1, i);
        const Complex b = rng::standard_complex_gaussian(5, 1, i + n);
        acc += a * std::conj(b);
    }
    CHECK(std::abs(acc) / n < 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("salted seeds separate domains") {
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 64; ++i) seen.insert(rng::salted_seed(99, i));
    CHECK(seen.size() == 64);
}
