#pragma once

// Affine-chart points on CP^m (m <= 2) and the exact Fubini-Study kernel
// quantities: geodesic distance, the normalized kernel P_N = cos^N dist, and
// the complex covariance of coherent-state values in the canonical frame.

#include <array>

#include "cpzeros/common.hpp"

namespace cpzeros {

inline constexpr int kMaxDim = 2;

struct ChartPoint {
    int chart = 0;                       // which homogeneous coordinate is 1
    int dim = 1;                         // complex dimension m
    std::array<Complex, kMaxDim> coords{};

    static ChartPoint c1(Complex z, int chart = 0) { return {chart, 1, {z, Complex{}}}; }
    static ChartPoint c2(Complex z1, Complex z2, int chart = 0) { return {chart, 2, {z1, z2}}; }
    static ChartPoint infinity() { return c1(Complex{0.0, 0.0}, 1); }  // m=1 chart-1 origin

    Complex z() const { return coords[0]; }       // m=1 shorthand
    double norm_sq() const {
        double s = 0.0;
        for (int i = 0; i < dim; ++i) s += std::norm(coords[i]);
        return s;
    }
};

// m=1 chart transition z -> 1/z; identity composed twice within 1e-12 on the seam.
ChartPoint other_chart(const ChartPoint& p);

// Chart-0 coordinate of an m=1 point (infinite if p is the chart-1 origin).
Complex to_chart0(const ChartPoint& p);

// Geodesic distance of the FS metric omega = (i/2) d d-bar log(1+|z|^2),
// in [0, pi/2].  Computed from the homogeneous lift, so it is exact across
// charts and free of overflow.
double fs_distance(const ChartPoint& a, const ChartPoint& b);

// Normalized Szego kernel P_N(z,w) = cos^N(dist(z,w)) in [0,1].
double p_kernel(const ChartPoint& a, const ChartPoint& b, int N);

// E xi_z conj(xi_w) in the canonical affine frame:
//   (1 + z.conj(w))^N / ((1+|z|^2)(1+|w|^2))^{N/2}.
// Both points must be in chart 0; |covariance_entry| == p_kernel.
Complex covariance_entry(const ChartPoint& a, const ChartPoint& b, int N);

}  // namespace cpzeros
