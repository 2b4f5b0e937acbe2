#include <cmath>

#include "cpzeros/ensemble.hpp"
#include "cpzeros/rng.hpp"
#include "doctest.h"

using namespace cpzeros;

TEST_CASE("section dimension counts multi-indices") {
    CHECK(section_dimension(1, 2) == 3);
    CHECK(section_dimension(2, 3) == 10);
    CHECK(section_dimension(2, 10) == 66);
    CHECK(section_dimension(1, 100) == 101);
    CHECK_THROWS_AS(section_dimension(0, 5), ValidationError);
}

TEST_CASE("graded-lex enumeration order") {
    const MultiIndexTable t(2, 2);
    REQUIRE(t.size() == 6);
    const int expect[6][2] = {{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
    for (int i = 0; i < 6; ++i) {
        CHECK(t[i][0] == expect[i][0]);
        CHECK(t[i][1] == expect[i][1]);
    }
    // multinomial weights: (2 choose (1,1)) = 2
    CHECK(std::exp(t.log_multinomial(4)) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("sampling is reproducible and has the right moments") {
    const EnsembleSpec spec{1, 4, 123};
    const PolySection a = sample_section(spec, 9);
    const PolySection b = sample_section(spec, 9);
    CHECK(a.coeffs == b.coeffs);
    CHECK(a.coeffs.size() == 5);

    // per-index second moment over 1e5 samples within [0.99, 1.01]
    const int trials = 100000;
    std::vector<double> sum_sq(5, 0.0);
    std::vector<Complex> buf;
    for (int t = 0; t < trials; ++t) {
        sample_coeffs_into(spec, t, buf);
        for (int j = 0; j < 5; ++j) sum_sq[j] += std::norm(buf[j]);
    }
    for (int j = 0; j < 5; ++j) {
        CHECK(sum_sq[j] / trials > 0.99);
        CHECK(sum_sq[j] / trials < 1.01);
    }
}

TEST_CASE("evaluate_f on crafted sections") {
    PolySection s;
    s.spec = {1, 2, 0};
    s.coeffs = {{1, 0}, {0, 0}, {0, 0}};
    CHECK(evaluate_f(s, ChartPoint::c1({0.7, -0.4})) == Complex{1.0, 0.0});

    s.coeffs = {{0, 0}, {1, 0}, {0, 0}};  // f = sqrt(2) z
    const Complex v = evaluate_f(s, ChartPoint::c1({2.0, 0.0}));
    CHECK(v.real() == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));

    s.coeffs = {{-1, 0}, {0, 0}, {1, 0}};  // f = z^2 - 1
    CHECK(std::abs(evaluate_f(s, ChartPoint::c1({1.0, 0.0}))) < 1e-14);
}

TEST_CASE("evaluate_f signals non-finite coefficients") {
    PolySection s;
    s.spec = {1, 1, 0};
    s.coeffs = {{std::nan(""), 0}, {1, 0}};
    CHECK_THROWS_AS(evaluate_f(s, ChartPoint::c1({2.0, 0.0})), NumericError);
}

TEST_CASE("hermitian norm: closed forms and chart independence") {
    PolySection s;
    s.spec = {1, 2, 0};
    s.coeffs = {{1, 0}, {0, 0}, {0, 0}};
    CHECK(hermitian_norm(s, ChartPoint::c1({0, 0})) == doctest::Approx(1.0));
    CHECK(hermitian_norm(s, ChartPoint::c1({1.0, 0.0})) == doctest::Approx(0.5).epsilon(1e-14));

    const EnsembleSpec spec{1, 37, 5};
    for (int t = 0; t < 50; ++t) {
        const PolySection r = sample_section(spec, t);
        const rng::UniformPair u = rng::uniform_pair(6, 0, t);
        const Complex z = std::polar(0.5 + 1.5 * u.half_open, 2.0 * kPi * u.open);
        const double n0 = hermitian_norm(r, ChartPoint::c1(z, 0));
        const double n1 = hermitian_norm(r, ChartPoint::c1(Complex{1.0, 0.0} / z, 1));
        CHECK(n0 == doctest::Approx(n1).epsilon(1e-10));
    }
}

TEST_CASE("hermitian norm survives large degree and large |z|") {
    const EnsembleSpec spec{1, 200, 8};
    const PolySection s = sample_section(spec, 0);
    const double v = hermitian_norm(s, ChartPoint::c1({50.0, 3.0}));
    CHECK(std::isfinite(v));
    CHECK(v >= 0.0);
}

TEST_CASE("szego diagonal closed form") {
    CHECK(szego_diagonal(1, 1) == doctest::Approx(2.0 / kPi).epsilon(1e-15));
    CHECK(szego_diagonal(1, 100) == doctest::Approx(101.0 / kPi).epsilon(1e-15));
    CHECK(szego_diagonal(2, 10) == doctest::Approx(binomial(12, 2) * 2.0 / (kPi * kPi)).epsilon(1e-15));
    // ratio to the leading term N^m/pi^m
    CHECK(szego_diagonal(1, 100) / szego_diagonal_leading(1, 100) ==
          doctest::Approx(1.01).epsilon(1e-12));
}

TEST_CASE("basis sum is the constant diagonal") {
    for (int i = 0; i < 100; ++i) {
        const rng::UniformPair u = rng::uniform_pair(21, 0, i);
        const int chart = u.open > 0.5 ? 1 : 0;
        const ChartPoint z = ChartPoint::c1(std::polar(u.half_open, 7.0 * u.open), chart);
        const double sum = szego_diagonal_basis_sum(1, 200, z);
        CHECK(sum == doctest::Approx(szego_diagonal(1, 200)).epsilon(1e-9));
    }
    // m = 2
    for (int i = 0; i < 20; ++i) {
        const rng::UniformPair u = rng::uniform_pair(22, 0, 2 * i);
        const rng::UniformPair v = rng::uniform_pair(22, 0, 2 * i + 1);
        const ChartPoint z = ChartPoint::c2(std::polar(u.half_open, 3.0 * u.open),
                                            std::polar(v.half_open, 5.0 * v.open));
        CHECK(szego_diagonal_basis_sum(2, 10, z) ==
              doctest::Approx(szego_diagonal(2, 10)).epsilon(1e-9));
    }
}

TEST_CASE("per-point second moment is isotropic") {
    // E |s|_h^2 = 1 at every point; 3 sigma band with 2e4 samples per point
    const EnsembleSpec spec{1, 12, 99};
    for (double re : {0.0, 0.4, 1.7}) {
        const ChartPoint z = ChartPoint::c1({re, 0.2});
        double acc = 0.0;
        const int trials = 20000;
        for (int t = 0; t < trials; ++t) {
            const double h = hermitian_norm(sample_section(spec, t), z);
            acc += h * h;
        }
        // Var(|xi|^2) = 1 for standard complex gaussian xi
        CHECK(std::abs(acc / trials - 1.0) < 3.0 / std::sqrt(static_cast<double>(trials)));
    }
}

TEST_CASE("orthonormality defect by quadrature") {
    QuadratureGrid g;
    g.radial_cells = 40;
    g.angular_cells = 48;
    g.points_per_cell = 4;
    CHECK(orthonormality_defect(1, 1, g) <= 1e-8);
    CHECK(orthonormality_defect(1, 10, g) <= 1e-7);

    QuadratureGrid g2;  // m=2 rule: radial_cells GL nodes/axis, angular_cells angle nodes/axis
    g2.radial_cells = 20;
    g2.angular_cells = 12;
    CHECK(orthonormality_defect(2, 3, g2) <= 1e-7);
}

TEST_CASE("json round trip in graded-lex order") {
    const PolySection s = sample_section({2, 3, 41}, 17);
    const std::string text = section_to_json(s);
    const PolySection back = section_from_json(text);
    CHECK(back.spec.m == 2);
    CHECK(back.spec.degree == 3);
    CHECK(back.spec.master_seed == 41);
    CHECK(back.trial == 17);
    CHECK(back.coeffs == s.coeffs);
}
