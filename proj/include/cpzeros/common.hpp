#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cpzeros {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Bad input (config, preconditions).  Mapped to exit code 2 by the CLI.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure (non-convergence, singular matrix).  Exit code 3.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact for all (n,k) whose result fits in double's integer range; the
// multiplicative form keeps every intermediate an exact integer ratio.
inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

inline double log_binomial(int n, int k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Pairwise (cascade) summation: deterministic for a fixed element order and
// O(eps log n) error, independent of thread count as long as the order of the
// input array is fixed.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t h = v.size() / 2;
    return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

inline int resolve_threads(int requested) {
#ifdef _OPENMP
    return requested > 0 ? requested : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

// Static-partition parallel loop.  fn(i) must write only to slot i of any
// shared output, which makes the result independent of the thread count.
template <class F>
void parallel_for(std::int64_t n, int threads, F&& fn) {
#ifdef _OPENMP
    const int t = resolve_threads(threads);
    if (t > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(t)
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
#else
    (void)threads;
#endif
    for (std::int64_t i = 0; i < n; ++i) fn(i);
}

// Serial reference for the loop above, kept so tests can pin down the
// parallel path bit-for-bit.
template <class F>
void serial_for(std::int64_t n, F&& fn) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
}

}  // namespace cpzeros
