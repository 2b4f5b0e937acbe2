#pragma once

// Zero statistics through the Poincare-Lelong formula:
//
//   int_{Z_s} psi = (N/pi) int psi dVol + (1/(2 pi)) int Lap(psi) log|s|_h dA,
//
// with the Laplacian term over the chart in Euclidean measure.  Smoothed
// indicators psi_1 <= chi_U <= psi_2 (quintic smoothstep collars with
// closed-form Laplacian) turn this into two-sided volume estimates without
// root finding; log-modulus integrals and sphere averages back the
// concentration checks.

#include "cpzeros/domain.hpp"
#include "cpzeros/ensemble.hpp"
#include "cpzeros/quadrature.hpp"

namespace cpzeros {

class TestFunction {
public:
    enum class Side { inner, outer };

    // monotone transition band [lo, hi]: rising 0 -> 1 or falling 1 -> 0
    struct Edge {
        double lo = 0.0, hi = 0.0;
        bool rising = true;
    };

    static TestFunction constant_one(int m = 1);

    int dim() const { return dim_; }
    bool is_constant_one() const { return one_; }
    const DomainSpec& base() const { return base_; }
    Complex center() const { return center_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // psi and the Euclidean R^{2m} Laplacian at radius rho from the center
    double radial_value(double rho) const;
    double radial_laplacian(double rho) const;

    double value(Complex z) const;       // m=1, chart 0
    double laplacian(Complex z) const;   // m=1, chart 0
    double value_chart(int chart, Complex zc) const;
    double value_at_infinity() const;

    double value2(Complex z1, Complex z2) const;      // m=2, ball profiles
    double laplacian2(Complex z1, Complex z2) const;

private:
    friend TestFunction smooth_indicator(const DomainSpec& d, double width, Side side, int m);
    int dim_ = 1;
    bool one_ = false;
    DomainSpec base_;
    Complex center_{0.0, 0.0};
    std::vector<Edge> edges_;
};

// psi_1 (side = inner, psi <= chi_D) or psi_2 (outer, psi >= chi_D) for disk,
// annulus, complement and cap domains.  Throws if the width does not fit D.
// m=2 supports origin-centered disks (balls in chart 0).
TestFunction smooth_indicator(const DomainSpec& d, double width, TestFunction::Side side,
                              int m = 1);

struct LogIntegral {
    double signed_part = 0.0;
    double absolute = 0.0;
};

// (int log|s|_h dVol, int |log|s|_h| dVol) over CP^1.  `roots` mark the
// integrable singularities; `log_shift` is added to log|s|_h pointwise (pass
// log gamma_{N,m} to integrate the L2-normalized ensemble modulus).  Throws
// NumericError when the paired coarse-grid estimate disagrees beyond
// grid.convergence_tol.
LogIntegral integrate_log_modulus(const PolySection& s, const QuadratureGrid& g,
                                  std::span<const Complex> roots = {}, double log_shift = 0.0,
                                  int threads = 0);

// m=2 variant over the chart-0 ball of the given radius.
LogIntegral integrate_log_modulus_ball2(const PolySection& s, double radius,
                                        const QuadratureGrid& g);

// FS mass int psi dVol (center-0 radial profiles take an aligned 1-d rule).
double psi_fs_mass(const TestFunction& psi, const QuadratureGrid& g, int threads = 0);

// The Poincare-Lelong linear statistic; equals sum_{roots} psi for m=1.
double pl_linear_statistic(const PolySection& s, const TestFunction& psi, const QuadratureGrid& g,
                           std::span<const Complex> roots = {}, int threads = 0);

struct Sandwich {
    double lower = 0.0, upper = 0.0;
};

// (pl with inner psi_1, pl with outer psi_2); for m=1 the zero count in D
// lies between the two up to quadrature tolerance.  For m=2, brackets the
// Euclidean area statistic int_{Z cap U} beta of origin-centered balls.
Sandwich volume_sandwich(const PolySection& s, const DomainSpec& d, double width,
                         const QuadratureGrid& g, int threads = 0);

struct SphereAverage {
    double value = 0.0;
    bool flagged = false;  // a root within 1e-9 of the sphere
};

// int log^- |s|_h dsigma_r over ||z|| = r against the invariant probability
// measure (circle average for m=1, 3-sphere average for m=2).
SphereAverage sphere_log_minus(const PolySection& s, double r, const QuadratureGrid& g,
                               std::span<const Complex> roots = {});

// P_r(zeta, z) = r^{2m-2} (r^2 - ||zeta||^2) / ||zeta - z||^{2m}; normalized
// so harmonic functions reproduce. Throws if ||zeta|| >= r.
double poisson_kernel(const ChartPoint& zeta, const ChartPoint& z, double r);

// quadrature calibration: Vol(CP^m) = pi (m=1) or pi^2/2 (m=2)
double fs_volume(int m, const QuadratureGrid& g);

}  // namespace cpzeros
