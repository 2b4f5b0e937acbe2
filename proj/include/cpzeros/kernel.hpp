#pragma once

// Coherent-state lattice around a chart point, its Hermitian covariance
// matrix Delta (unit diagonal, |Delta_{mu nu}| = P_N), almost-independence
// row sums, the spectral lower bound, and whitening zeta = Delta^{-1/2} xi.

#include <vector>

#include "cpzeros/geometry.hpp"
#include "cpzeros/linalg.hpp"

namespace cpzeros {

struct Lattice {
    ChartPoint center;
    double half_width = 0.0;  // t
    double spacing = 0.0;     // a
    int degree = 0;           // N
    int m = 1;
    std::vector<ChartPoint> points;
    std::vector<std::array<int, 2 * kMaxDim>> indices;  // nu, 2m entries used
};

// points nu -> z0 + (a/sqrt(N)) nu, |nu_j| <= floor(t sqrt(N)/a), identifying
// R^{2m} with C^m coordinate-wise.  Throws if the point count would exceed
// max_points (the covariance matrix is dense).
Lattice build_lattice(const ChartPoint& z0, double t, double a, int N, int m,
                      int max_points = 20000);

struct CovMatrix {
    int n = 0;
    std::vector<Complex> a;  // row-major, Hermitian, unit diagonal

    Complex at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    Complex& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
};

CovMatrix build_covariance(const Lattice& lat, int threads = 0);
CovMatrix build_covariance_serial(const Lattice& lat);  // reference for tests

// max over rows of the off-diagonal absolute sum.
double row_sum_max(const CovMatrix& cov);

double min_eigenvalue(const CovMatrix& cov);

// zeta = Delta^{-1/2} xi via the Hermitian spectral square root.  Throws if
// the smallest eigenvalue is below eig_floor.
std::vector<Complex> whiten(std::span<const Complex> xi, const CovMatrix& cov,
                            double eig_floor = 1e-8);

// Values xi_mu = f(z_mu) (1+|z_mu|^2)^{-N/2} of a weighted m=1 coefficient
// vector on the lattice (standard complex Gaussians with covariance Delta).
std::vector<Complex> coherent_values(std::span<const Complex> weighted, const Lattice& lat);

// Smallest a on the 0.1 grid in [a_min, a_max] with row_sum_max <= 1/2.
double min_spacing_for_half(const ChartPoint& z0, double t, int N, int m, double a_min = 1.0,
                            double a_max = 6.0);

// CSV exports: lattice points (mu, re, im) and covariance (mu, nu, re, im).
std::string lattice_to_csv(const Lattice& lat);
std::string covariance_to_csv(const CovMatrix& cov);

}  // namespace cpzeros
