#pragma once

// Root location for m=1 sections, zero counting in domains, the Nevanlinna
// counting statistic and the grid estimator for the maximum Hermitian
// modulus.

#include <vector>

#include "cpzeros/domain.hpp"
#include "cpzeros/ensemble.hpp"

namespace cpzeros {

struct RootSet {
    std::vector<Complex> roots;      // chart-0 coordinates
    std::vector<double> residuals;   // relative backward error per root
    int degree_at_infinity = 0;      // zeros at the chart-1 origin

    int total_degree() const { return static_cast<int>(roots.size()) + degree_at_infinity; }
};

// Aberth-Ehrlich simultaneous iteration with reversed-polynomial evaluation
// for |z| > 1 and a companion-matrix QR fallback.  Reusable: keeps its
// workspace between calls (one instance per thread).
class AberthSolver {
public:
    // coefficients a_0..a_deg of the chart-0 polynomial (monomial-weighted
    // for ensemble sections).  Throws NumericError on the zero polynomial or
    // solver non-convergence.
    RootSet solve(std::span<const Complex> coeffs);

    int max_iterations = 200;
    int restarts = 3;
    double newton_tol = 1e-13;
    double residual_tol = 1e-8;
    double infinity_threshold = 1e12;  // |z| beyond which a root counts at infinity

private:
    std::vector<Complex> work_, roots_, rev_;
    std::vector<bool> done_;

    bool aberth_pass(std::span<const Complex> a, int attempt);
    void companion_qr(std::span<const Complex> a);
};

RootSet find_roots(const PolySection& s);

int count_in_domain(const RootSet& rs, const DomainSpec& d);

// n_f(r, 0): zero count in the Euclidean disc of radius r about 0 (the m=1
// unintegrated Nevanlinna counting function).
double nevanlinna_count(const RootSet& rs, double r);

// Multi-level grid search for sup_D |s|_{h^N}: coarse FS spacing pi/(4 sqrt N)
// over both charts, then `levels` rounds of 4x local refinement.  A lower
// bound of the true supremum by construction; deterministic.
double max_modulus(const PolySection& s, const DomainSpec& d, int levels = 4);

// RootSet export: CSV of (re, im, residual) plus the infinity count header.
std::string rootset_to_csv(const RootSet& rs);

}  // namespace cpzeros
