#pragma once

// The SU(m+1) ensembles: Gaussian random holomorphic sections of O(N) -> CP^m
// with the Fubini-Study metric,
//
//   f_N(z) = sum_{|J| <= N} c_J (N choose J)^{1/2} z^J,
//
// with iid standard complex Gaussian c_J.  The chart representative f_N pairs
// with the Hermitian factor (1+|z|^2)^{-N/2}; with that normalization
// E |f_N|_h^2 = 1 at every point, and the L2-orthonormal basis carries the
// extra factor gamma_{N,m} = sqrt(binom(N+m,m) m! / pi^m).

#include <cstdint>
#include <string>
#include <vector>

#include "cpzeros/geometry.hpp"
#include "cpzeros/quadrature.hpp"

namespace cpzeros {

struct EnsembleSpec {
    int m = 1;
    int degree = 1;  // N
    std::uint64_t master_seed = 0;
};

std::int64_t section_dimension(int m, int N);  // d_N = binom(N+m, m)

// Graded-lexicographic enumeration of multi-indices |J| <= N: ascending total
// degree, then ascending lexicographic on (j_1, ..., j_m).  For m=1 this is
// 0, 1, ..., N.
class MultiIndexTable {
public:
    MultiIndexTable(int m, int N);
    int dim() const { return m_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(entries_.size()) / m_; }
    std::span<const int> operator[](int i) const {
        return {entries_.data() + static_cast<std::size_t>(i) * m_, static_cast<std::size_t>(m_)};
    }
    int total_degree(int i) const;
    double log_multinomial(int i) const { return log_multi_[i]; }  // log (N choose J)

private:
    int m_;
    int degree_;
    std::vector<int> entries_;
    std::vector<double> log_multi_;
};

struct PolySection {
    EnsembleSpec spec;
    std::uint64_t trial = 0;
    std::vector<Complex> coeffs;  // c_J in graded-lex order, length d_N
};

// Coefficients are fully determined by (master_seed, trial, index) through
// the counter-based generator; identical inputs give bit-identical sections
// on any thread.
PolySection sample_section(const EnsembleSpec& spec, std::uint64_t trial);
void sample_coeffs_into(const EnsembleSpec& spec, std::uint64_t trial, std::vector<Complex>& out);

// f_N at a chart point.  For m=1 with |z| > 1 the reversed-coefficient
// polynomial is evaluated at 1/z (coefficient reversal = chart transition),
// so only the true value can overflow, never an intermediate.  Throws on
// non-finite coefficients.
Complex evaluate_f(const PolySection& s, const ChartPoint& z);

// |f_N(z)| (1+|z|^2)^{-N/2}; chart-independent, exactly 0 at zeros.
double hermitian_norm(const PolySection& s, const ChartPoint& z);

// Exact constant diagonal Pi_N(z,z) = binom(N+m,m) m!/pi^m and its leading
// term N^m/pi^m.
double szego_diagonal(int m, int N);
double szego_diagonal_leading(int m, int N);

// gamma_{N,m}: scale between the SU(m+1) coefficient convention and the
// L2-orthonormal basis.
double basis_normalization(int m, int N);

// Direct basis sum  sum_J |S_J(z)|_h^2  (equals szego_diagonal identically;
// kept as the independent route for the constant-diagonal checks).
double szego_diagonal_basis_sum(int m, int N, const ChartPoint& z);

// max_{J,K} |<S_J, S_K> - delta_JK| by numerical quadrature of the induced
// inner product.  m = 1 (N <= ~40) or m = 2 (small N).
double orthonormality_defect(int m, int N, const QuadratureGrid& grid);

// m=1 helpers: monomial-weighted coefficients a_j = c_j sqrt(C(N,j)).
void weighted_coeffs_into(const PolySection& s, std::vector<Complex>& a);
std::vector<Complex> weighted_coeffs(const PolySection& s);

// Reusable per-(spec) sampler producing weighted coefficients without
// re-deriving the weights (hot path of the Monte Carlo drivers; m=1).
class SectionSampler {
public:
    explicit SectionSampler(const EnsembleSpec& spec);
    const EnsembleSpec& spec() const { return spec_; }
    void sample_weighted(std::uint64_t trial, std::vector<Complex>& a) const;

private:
    EnsembleSpec spec_;
    std::vector<double> weights_;
};

// Cached evaluator for quadrature loops: one weighted-coefficient setup,
// many norm evaluations.
class SectionEvaluator {
public:
    explicit SectionEvaluator(const PolySection& s);

    // log |s|_h at a chart coordinate (m=1); -inf exactly at zeros.
    double log_hnorm(int chart, Complex zc) const;
    double hnorm(int chart, Complex zc) const { return std::exp(log_hnorm(chart, zc)); }
    int degree() const { return degree_; }

private:
    int degree_;
    std::vector<Complex> a_, rev_;
};

// Same for m=2 (chart-0 ball regions), via the overflow-free scaled term sum.
class SectionEvaluator2 {
public:
    explicit SectionEvaluator2(const PolySection& s);
    double log_hnorm(Complex z1, Complex z2) const;
    int degree() const { return degree_; }

private:
    int degree_;
    MultiIndexTable table_;
    std::vector<Complex> coeffs_;
};

// JSON round-trip: {"m":..,"N":..,"seed":..,"trial":..,"coeffs":[[re,im],..]}
// in graded-lex order.
std::string section_to_json(const PolySection& s);
PolySection section_from_json(const std::string& text);

}  // namespace cpzeros
