#pragma once

// Quadrature over CP^1 (two unit-disc charts), CP^2 (three unit-polydisc
// charts), Euclidean annuli and spheres.
//
// Scheme: polar panels with Gauss-Legendre nodes radially and equispaced
// midpoint nodes angularly.  The angular rule is the composite midpoint rule
// on a periodic integrand, which integrates every Fourier mode e^{ik theta}
// with 0 < |k| < n_nodes exactly; points_per_cell = 1 degenerates to the
// plain midpoint scheme.  Panels within `refine_reach` panel-widths of a
// marked singular point are split dyadically up to `refine_depth` levels,
// which resolves integrable log singularities at section zeros.
//
// Top-level panels are evaluated independently (possibly in parallel) into a
// fixed-order array and combined by pairwise summation, so results do not
// depend on the thread count.

#include <functional>
#include <span>
#include <utility>

#include "cpzeros/common.hpp"

namespace cpzeros {

struct QuadratureGrid {
    int radial_cells = 32;
    int angular_cells = 64;
    int points_per_cell = 4;   // per axis within a panel; 1 = midpoint rule
    int refine_depth = 6;
    double refine_reach = 3.0;
    double convergence_tol = 5e-3;  // relative, for the paired coarse-grid check
    bool check_convergence = true;

    static QuadratureGrid standard() { return {}; }
    static QuadratureGrid fine() { return {48, 96, 5, 7, 3.0, 5e-3, true}; }
    static QuadratureGrid coarser(const QuadratureGrid& g) {
        QuadratureGrid c = g;
        c.radial_cells = std::max(4, g.radial_cells / 2);
        c.angular_cells = std::max(8, g.angular_cells / 2);
        c.refine_depth = std::max(3, g.refine_depth - 1);
        return c;
    }
};

// Integrand in chart coordinates; called with the chart id and the chart
// coordinate.  The FS volume density is supplied by the engine.
using ChartIntegrand = std::function<double(int chart, Complex z)>;

// integral over CP^1 of f dVol_FS, dVol = dA/(1+|z|^2)^2 in either chart.
// `singular` lists chart-0 locations of integrable singularities.
double integrate_cp1(const ChartIntegrand& f, const QuadratureGrid& g,
                     std::span<const Complex> singular = {}, int threads = 0);
double integrate_cp1_serial(const ChartIntegrand& f, const QuadratureGrid& g,
                            std::span<const Complex> singular = {});

// One-pass (integral of f, integral of |f|) pair.
std::pair<double, double> integrate_cp1_signed_abs(const ChartIntegrand& f, const QuadratureGrid& g,
                                                   std::span<const Complex> singular = {},
                                                   int threads = 0);

// Euclidean-measure integral of f over the annulus r_lo <= |z-center| <= r_hi
// in chart 0 (the Laplacian term of the Poincare-Lelong pairing).
double integrate_annulus(Complex center, double r_lo, double r_hi,
                         const std::function<double(Complex)>& f, const QuadratureGrid& g,
                         std::span<const Complex> singular = {}, int threads = 0);

// Chart-0 Euclidean-measure integral over the disc |z - center| <= r.
double integrate_disc(Complex center, double r, const std::function<double(Complex)>& f,
                      const QuadratureGrid& g, std::span<const Complex> singular = {},
                      int threads = 0);

// Node iteration (serial, fixed order) for Gram-type accumulations.
void foreach_cp1_node(const QuadratureGrid& g,
                      const std::function<void(int chart, Complex z, double fs_weight)>& fn);

// CP^2 as three unit polydiscs (chart c covers {|Z_i| <= |Z_c|}); weight is
// the FS volume density dV_4/(1+|u|^2)^3.
void foreach_cp2_node(const QuadratureGrid& g,
                      const std::function<void(int chart, Complex z1, Complex z2, double fs_weight)>& fn);

// Ball-region integral in chart 0 of CP^2 against FS volume.
double integrate_cp2_ball(double radius, const std::function<double(Complex, Complex)>& f,
                          const QuadratureGrid& g);

// Gauss-Legendre nodes/weights on [-1,1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace cpzeros
