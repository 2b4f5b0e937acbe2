#include <cmath>

#include "cpzeros/ensemble.hpp"
#include "cpzeros/geometry.hpp"
#include "cpzeros/rng.hpp"
#include "doctest.h"

using namespace cpzeros;

namespace {
ChartPoint pt(double re, double im = 0.0, int chart = 0) {
    return ChartPoint::c1(Complex{re, im}, chart);
}
}  // namespace

TEST_CASE("fs_distance identities") {
    CHECK(fs_distance(pt(0.0), pt(0.0)) == 0.0);
    CHECK(fs_distance(pt(0.0), pt(1.0)) == doctest::Approx(kPi / 4).epsilon(1e-14));
    // antipodal: infinity is the chart-1 origin
    CHECK(fs_distance(pt(0.0), ChartPoint::infinity()) == doctest::Approx(kPi / 2).epsilon(1e-14));
}

TEST_CASE("fs_distance symmetry and triangle inequality") {
    for (int i = 0; i < 200; ++i) {
        const rng::UniformPair u1 = rng::uniform_pair(11, 0, 3 * i);
        const rng::UniformPair u2 = rng::uniform_pair(11, 0, 3 * i + 1);
        const rng::UniformPair u3 = rng::uniform_pair(11, 0, 3 * i + 2);
        const ChartPoint a = pt(2.0 * u1.open - 1.0, 2.0 * u1.half_open - 1.0);
        const ChartPoint b = pt(2.0 * u2.open - 1.0, 2.0 * u2.half_open - 1.0);
        const ChartPoint c = pt(2.0 * u3.open - 1.0, 2.0 * u3.half_open - 1.0);
        CHECK(fs_distance(a, b) == doctest::Approx(fs_distance(b, a)).epsilon(1e-14));
        CHECK(fs_distance(a, c) <= fs_distance(a, b) + fs_distance(b, c) + 1e-12);
    }
}

TEST_CASE("chart transition round trip on the seam") {
    for (int i = 0; i < 100; ++i) {
        const rng::UniformPair u = rng::uniform_pair(12, 0, i);
        const double r = 0.5 + 1.5 * u.half_open;
        const Complex z = std::polar(r, 2.0 * kPi * u.open);
        const ChartPoint p = pt(z.real(), z.imag());
        const ChartPoint back = other_chart(other_chart(p));
        CHECK(std::abs(back.coords[0] - z) <= 1e-12 * std::abs(z));
        // distance is chart-invariant
        CHECK(fs_distance(p, pt(0.3, 0.1)) ==
              doctest::Approx(fs_distance(other_chart(p), pt(0.3, 0.1))).epsilon(1e-12));
    }
}

TEST_CASE("p_kernel values") {
    CHECK(p_kernel(pt(0.4, -0.2), pt(0.4, -0.2), 57) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p_kernel(pt(0.0), pt(1.0), 2) == doctest::Approx(0.5).epsilon(1e-13));
    // cos^N of the distance on a random pair
    const ChartPoint a = pt(0.3, 0.7), b = pt(-0.2, 0.05);
    const double d = fs_distance(a, b);
    CHECK(p_kernel(a, b, 31) == doctest::Approx(std::pow(std::cos(d), 31)).epsilon(1e-12));
}

TEST_CASE("covariance_entry matches the kernel and the closed form") {
    CHECK(covariance_entry(pt(0.2, 0.9), pt(0.2, 0.9), 12) == Complex{1.0, 0.0});
    const Complex v = covariance_entry(pt(0.0), pt(1.0), 2);
    CHECK(v.real() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-14));
    for (int i = 0; i < 100; ++i) {
        const rng::UniformPair u1 = rng::uniform_pair(13, 0, 2 * i);
        const rng::UniformPair u2 = rng::uniform_pair(13, 0, 2 * i + 1);
        const ChartPoint a = pt(u1.open, u1.half_open - 0.5);
        const ChartPoint b = pt(u2.open - 0.3, u2.half_open);
        CHECK(std::abs(covariance_entry(a, b, 40)) ==
              doctest::Approx(p_kernel(a, b, 40)).epsilon(1e-12));
    }
}

TEST_CASE("empirical coherent-state covariance matches covariance_entry") {
    // xi_z = f(z) (1+|z|^2)^{-N/2} has E xi_z conj(xi_w) = covariance_entry
    const EnsembleSpec spec{1, 6, 77};
    const ChartPoint z = pt(0.4), w = pt(-0.3, 0.5);
    const int trials = 20000;
    Complex acc{0.0, 0.0};
    for (int t = 0; t < trials; ++t) {
        const PolySection s = sample_section(spec, t);
        const Complex fz = evaluate_f(s, z), fw = evaluate_f(s, w);
        const double hz = std::pow(1.0 + std::norm(z.coords[0]), -0.5 * spec.degree);
        const double hw = std::pow(1.0 + std::norm(w.coords[0]), -0.5 * spec.degree);
        acc += fz * hz * std::conj(fw * hw);
    }
    const Complex expected = covariance_entry(z, w, spec.degree);
    CHECK(std::abs(acc / static_cast<double>(trials) - expected) <
          3.0 / std::sqrt(static_cast<double>(trials)));
}
