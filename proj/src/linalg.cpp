#include "cpzeros/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cpzeros {

namespace {

double off_diagonal_frobenius(const std::vector<Complex>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a[static_cast<std::size_t>(i) * n + j]);
    return std::sqrt(s);
}

double frobenius(const std::vector<Complex>& a) {
    double s = 0.0;
    for (const Complex& x : a) s += std::norm(x);
    return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eigen_jacobi(std::span<const Complex> a_in, int n, double tol,
                                      int max_sweeps) {
    if (n <= 0 || static_cast<std::size_t>(n) * n != a_in.size())
        throw ValidationError("hermitian_eigen_jacobi: bad dimensions");

    std::vector<Complex> a(a_in.begin(), a_in.end());
    std::vector<Complex> v(static_cast<std::size_t>(n) * n, Complex{0.0, 0.0});
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = Complex{1.0, 0.0};

    auto at = [&](int i, int j) -> Complex& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto vt = [&](int i, int j) -> Complex& { return v[static_cast<std::size_t>(i) * n + j]; };

    const double stop = tol * std::max(1.0, frobenius(a));
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_frobenius(a, n) < stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = at(p, q);
                const double beta = std::abs(apq);
                if (beta == 0.0) continue;
                const double alpha = at(p, p).real();
                const double delta = at(q, q).real();
                // rotation angle annihilating the pivot: tan(2 theta) = 2|apq|/(aqq-app)
                double t;
                if (alpha == delta) {
                    t = 1.0;
                } else {
                    const double tau = (delta - alpha) / (2.0 * beta);
                    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex phase = apq / beta;  // e^{i phi}

                // columns: A <- A R with R_pp=c, R_pq=s e^{i phi}, R_qp=-s e^{-i phi}, R_qq=c
                for (int i = 0; i < n; ++i) {
                    const Complex aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * std::conj(phase) * aiq;
                    at(i, q) = s * phase * aip + c * aiq;
                }
                // rows: A <- R^* A  (conjugate-transposed rotation)
                for (int j = 0; j < n; ++j) {
                    const Complex apj = at(p, j), aqj = at(q, j);
                    at(p, j) = c * apj - s * phase * aqj;
                    at(q, j) = s * std::conj(phase) * apj + c * aqj;
                }
                // keep the pivot exactly zero and the diagonal exactly real
                at(p, q) = Complex{0.0, 0.0};
                at(q, p) = Complex{0.0, 0.0};
                at(p, p) = Complex{at(p, p).real(), 0.0};
                at(q, q) = Complex{at(q, q).real(), 0.0};

                for (int i = 0; i < n; ++i) {
                    const Complex vip = vt(i, p), viq = vt(i, q);
                    vt(i, p) = c * vip - s * std::conj(phase) * viq;
                    vt(i, q) = s * phase * vip + c * viq;
                }
            }
        }
    }
    if (sweep == max_sweeps && off_diagonal_frobenius(a, n) >= stop)
        throw NumericError("hermitian_eigen_jacobi: no convergence within sweep cap");

    HermitianEigen out;
    out.n = n;
    out.sweeps = sweep;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = at(i, i).real();
    std::sort(order.begin(), order.end(), [&](int x, int y) { return diag[x] < diag[y]; });
    out.values.resize(n);
    out.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = diag[order[k]];
        for (int i = 0; i < n; ++i) out.vectors[static_cast<std::size_t>(k) * n + i] = vt(i, order[k]);
    }
    return out;
}

std::vector<Complex> apply_spectral_function(const HermitianEigen& eig,
                                             const std::vector<double>& f_of_values,
                                             std::span<const Complex> x) {
    const int n = eig.n;
    if (static_cast<int>(f_of_values.size()) != n || static_cast<int>(x.size()) != n)
        throw ValidationError("apply_spectral_function: size mismatch");
    std::vector<Complex> y(n, Complex{0.0, 0.0});
    for (int k = 0; k < n; ++k) {
        Complex proj{0.0, 0.0};
        for (int i = 0; i < n; ++i) proj += std::conj(eig.vec(k, i)) * x[i];
        proj *= f_of_values[k];
        for (int i = 0; i < n; ++i) y[i] += eig.vec(k, i) * proj;
    }
    return y;
}

}  // namespace cpzeros
