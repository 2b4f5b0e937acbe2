#include "cpzeros/kernel.hpp"

#include <cmath>
#include <sstream>

namespace cpzeros {

Lattice build_lattice(const ChartPoint& z0, double t, double a, int N, int m, int max_points) {
    if (t <= 0.0 || a <= 0.0) throw ValidationError("build_lattice: t, a must be positive");
    if (m < 1 || m > kMaxDim) throw ValidationError("build_lattice: m out of range");
    if (z0.chart != 0) throw ValidationError("build_lattice: chart-0 center required");
    const double ratio = t * std::sqrt(static_cast<double>(N)) / a;
    if (ratio < 1.0) throw ValidationError("build_lattice: need t sqrt(N)/a >= 1");
    const int K = static_cast<int>(std::floor(ratio));
    const int side = 2 * K + 1;
    double count = 1.0;
    for (int i = 0; i < 2 * m; ++i) count *= side;
    if (count > static_cast<double>(max_points))
        throw ValidationError("build_lattice: point count exceeds cap (dense covariance)");

    Lattice lat;
    lat.center = z0;
    lat.half_width = t;
    lat.spacing = a;
    lat.degree = N;
    lat.m = m;
    const double h = a / std::sqrt(static_cast<double>(N));

    std::array<int, 2 * kMaxDim> nu{};
    nu.fill(-K);
    const int dims = 2 * m;
    while (true) {
        ChartPoint p = z0;
        p.dim = m;
        for (int c = 0; c < m; ++c)
            p.coords[c] = z0.coords[c] + Complex{h * nu[2 * c], h * nu[2 * c + 1]};
        lat.points.push_back(p);
        lat.indices.push_back(nu);
        int d = dims - 1;
        while (d >= 0 && nu[d] == K) {
            nu[d] = -K;
            --d;
        }
        if (d < 0) break;
        ++nu[d];
    }
    return lat;
}

namespace {

CovMatrix build_covariance_impl(const Lattice& lat, int threads, bool serial) {
    const int n = static_cast<int>(lat.points.size());
    CovMatrix cov;
    cov.n = n;
    cov.a.assign(static_cast<std::size_t>(n) * n, Complex{0.0, 0.0});
    auto fill_row = [&](std::int64_t i) {
        for (int j = 0; j < n; ++j) {
            cov.a[static_cast<std::size_t>(i) * n + j] =
                i == j ? Complex{1.0, 0.0}
                       : covariance_entry(lat.points[i], lat.points[j], lat.degree);
        }
    };
    if (serial)
        serial_for(n, fill_row);
    else
        parallel_for(n, threads, fill_row);
    return cov;
}

}  // namespace

CovMatrix build_covariance(const Lattice& lat, int threads) {
    return build_covariance_impl(lat, threads, false);
}

CovMatrix build_covariance_serial(const Lattice& lat) {
    return build_covariance_impl(lat, 0, true);
}

double row_sum_max(const CovMatrix& cov) {
    double best = 0.0;
    for (int i = 0; i < cov.n; ++i) {
        double s = 0.0;
        for (int j = 0; j < cov.n; ++j)
            if (j != i) s += std::abs(cov.at(i, j));
        best = std::max(best, s);
    }
    return best;
}

double min_eigenvalue(const CovMatrix& cov) {
    const auto eig = hermitian_eigen_jacobi(cov.a, cov.n);
    return eig.values.front();
}

std::vector<Complex> whiten(std::span<const Complex> xi, const CovMatrix& cov, double eig_floor) {
    if (static_cast<int>(xi.size()) != cov.n) throw ValidationError("whiten: size mismatch");
    const auto eig = hermitian_eigen_jacobi(cov.a, cov.n);
    if (eig.values.front() <= eig_floor)
        throw NumericError("whiten: covariance matrix is numerically singular");
    std::vector<double> inv_sqrt(cov.n);
    for (int k = 0; k < cov.n; ++k) inv_sqrt[k] = 1.0 / std::sqrt(eig.values[k]);
    return apply_spectral_function(eig, inv_sqrt, xi);
}

std::vector<Complex> coherent_values(std::span<const Complex> weighted, const Lattice& lat) {
    if (lat.m != 1) throw ValidationError("coherent_values: m=1 only");
    std::vector<Complex> xi(lat.points.size());
    for (std::size_t i = 0; i < lat.points.size(); ++i) {
        const Complex z = lat.points[i].coords[0];
        Complex acc{0.0, 0.0};
        for (std::size_t j = weighted.size(); j-- > 0;) acc = acc * z + weighted[j];
        xi[i] = acc * std::exp(-0.5 * lat.degree * std::log1p(std::norm(z)));
    }
    return xi;
}

double min_spacing_for_half(const ChartPoint& z0, double t, int N, int m, double a_min,
                            double a_max) {
    for (double a = a_min; a <= a_max + 1e-9; a += 0.1) {
        if (t * std::sqrt(static_cast<double>(N)) / a < 1.0) break;
        const Lattice lat = build_lattice(z0, t, a, N, m);
        if (row_sum_max(build_covariance(lat)) <= 0.5) return a;
    }
    throw NumericError("min_spacing_for_half: no grid value meets the 1/2 bound");
}

std::string lattice_to_csv(const Lattice& lat) {
    std::ostringstream os;
    os.precision(17);
    os << "mu";
    for (int c = 0; c < lat.m; ++c) os << ",re" << c << ",im" << c;
    os << "\n";
    for (std::size_t i = 0; i < lat.points.size(); ++i) {
        os << i;
        for (int c = 0; c < lat.m; ++c)
            os << "," << lat.points[i].coords[c].real() << "," << lat.points[i].coords[c].imag();
        os << "\n";
    }
    return os.str();
}

std::string covariance_to_csv(const CovMatrix& cov) {
    std::ostringstream os;
    os.precision(17);
    os << "mu,nu,re,im\n";
    for (int i = 0; i < cov.n; ++i)
        for (int j = 0; j < cov.n; ++j)
            os << i << "," << j << "," << cov.at(i, j).real() << "," << cov.at(i, j).imag() << "\n";
    return os.str();
}

}  // namespace cpzeros
