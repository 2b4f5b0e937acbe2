#pragma once

// Dense complex Hermitian eigensolver: cyclic-by-row Jacobi with unitary
// plane rotations.  Good to machine precision for the small covariance
// matrices this project diagonalizes (n up to a few hundred).

#include <span>
#include <vector>

#include "cpzeros/common.hpp"

namespace cpzeros {

struct HermitianEigen {
    std::vector<double> values;  // ascending
    // column-major eigenvectors: vectors[k*n + i] is component i of the k-th
    // eigenvector, matching values[k]
    std::vector<Complex> vectors;
    int n = 0;
    int sweeps = 0;

    Complex vec(int k, int i) const { return vectors[static_cast<std::size_t>(k) * n + i]; }
};

// a: row-major n x n Hermitian.  Converges when the off-diagonal Frobenius
// norm drops below tol * max(1, ||A||_F); throws NumericError after
// max_sweeps sweeps.
HermitianEigen hermitian_eigen_jacobi(std::span<const Complex> a, int n, double tol = 1e-12,
                                      int max_sweeps = 100);

// y = f(A) x through the spectral decomposition (used for the inverse square
// root in whitening).
std::vector<Complex> apply_spectral_function(const HermitianEigen& eig,
                                             const std::vector<double>& f_of_values,
                                             std::span<const Complex> x);

}  // namespace cpzeros
