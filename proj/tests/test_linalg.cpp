#include <cmath>

#include "cpzeros/linalg.hpp"
#include "cpzeros/rng.hpp"
#include "doctest.h"

using namespace cpzeros;

namespace {

std::vector<Complex> random_hermitian(int n, std::uint64_t seed) {
    std::vector<Complex> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const Complex g = rng::standard_complex_gaussian(seed, i, j);
            if (i == j) {
                a[i * n + j] = Complex{g.real(), 0.0};
            } else {
                a[i * n + j] = g;
                a[j * n + i] = std::conj(g);
            }
        }
    }
    return a;
}

}  // namespace

TEST_CASE("identity and diagonal matrices") {
    std::vector<Complex> id = {{1, 0}, {0, 0}, {0, 0}, {1, 0}};
    const auto e = hermitian_eigen_jacobi(id, 2);
    CHECK(e.values[0] == doctest::Approx(1.0));
    CHECK(e.values[1] == doctest::Approx(1.0));

    std::vector<Complex> d = {{3, 0}, {0, 0}, {0, 0}, {-2, 0}};
    const auto e2 = hermitian_eigen_jacobi(d, 2);
    CHECK(e2.values[0] == doctest::Approx(-2.0));
    CHECK(e2.values[1] == doctest::Approx(3.0));
}

TEST_CASE("2x2 with real off-diagonal 0.3 has eigenvalues 0.7 and 1.3") {
    std::vector<Complex> a = {{1, 0}, {0.3, 0}, {0.3, 0}, {1, 0}};
    const auto e = hermitian_eigen_jacobi(a, 2);
    CHECK(e.values[0] == doctest::Approx(0.7).epsilon(1e-13));
    CHECK(e.values[1] == doctest::Approx(1.3).epsilon(1e-13));
}

TEST_CASE("2x2 with complex off-diagonal: [[2, i],[-i, 2]] -> {1, 3}") {
    std::vector<Complex> a = {{2, 0}, {0, 1}, {0, -1}, {2, 0}};
    const auto e = hermitian_eigen_jacobi(a, 2);
    CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("random hermitian: residuals, orthonormality, trace") {
    const int n = 24;
    const auto a = random_hermitian(n, 31337);
    const auto e = hermitian_eigen_jacobi(a, n);
    REQUIRE(static_cast<int>(e.values.size()) == n);
    // ascending order
    for (int k = 1; k < n; ++k) CHECK(e.values[k] >= e.values[k - 1]);
    // A v = lambda v
    for (int k = 0; k < n; ++k) {
        double resid = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex av{0.0, 0.0};
            for (int j = 0; j < n; ++j) av += a[i * n + j] * e.vec(k, j);
            resid = std::max(resid, std::abs(av - e.values[k] * e.vec(k, i)));
        }
        CHECK(resid < 1e-10);
    }
    // V^* V = I
    for (int k = 0; k < n; ++k)
        for (int l = k; l < n; ++l) {
            Complex dot{0.0, 0.0};
            for (int i = 0; i < n; ++i) dot += std::conj(e.vec(k, i)) * e.vec(l, i);
            CHECK(std::abs(dot - (k == l ? Complex{1, 0} : Complex{0, 0})) < 1e-12);
        }
    // trace preserved
    double tr = 0.0, sum = 0.0;
    for (int i = 0; i < n; ++i) tr += a[i * n + i].real();
    for (double v : e.values) sum += v;
    CHECK(sum == doctest::Approx(tr).epsilon(1e-12));
}

TEST_CASE("apply_spectral_function computes the inverse square root") {
    const int n = 12;
    auto a = random_hermitian(n, 99);
    // shift to be safely positive definite
    for (int i = 0; i < n; ++i) a[i * n + i] += Complex{8.0, 0.0};
    const auto e = hermitian_eigen_jacobi(a, n);
    REQUIRE(e.values.front() > 0.0);
    std::vector<double> inv_sqrt(n);
    for (int k = 0; k < n; ++k) inv_sqrt[k] = 1.0 / std::sqrt(e.values[k]);
    std::vector<Complex> x(n);
    for (int i = 0; i < n; ++i) x[i] = rng::standard_complex_gaussian(7, 7, i);
    const auto y = apply_spectral_function(e, inv_sqrt, x);
    // applying twice gives A^{-1} x: check A (A^{-1/2})^2 x = x
    const auto y2 = apply_spectral_function(e, inv_sqrt, y);
    for (int i = 0; i < n; ++i) {
        Complex ay{0.0, 0.0};
        for (int j = 0; j < n; ++j) ay += a[i * n + j] * y2[j];
        CHECK(std::abs(ay - x[i]) < 1e-10);
    }
}

TEST_CASE("bad input is rejected") {
    std::vector<Complex> a(4);
    CHECK_THROWS_AS(hermitian_eigen_jacobi(a, 3), ValidationError);
}
