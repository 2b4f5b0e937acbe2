#include "cpzeros/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace cpzeros {

namespace {

// Homogeneous lift [Z_0 : ... : Z_m] with Z_chart = 1.  Coordinates of a
// chart are bounded in practice (each chart only ever holds |z| <~ seam
// radius), so the lift never overflows.
std::array<Complex, kMaxDim + 1> lift(const ChartPoint& p) {
    std::array<Complex, kMaxDim + 1> h{};
    int slot = 0;
    for (int i = 0; i <= p.dim; ++i) {
        if (i == p.chart) {
            h[i] = Complex{1.0, 0.0};
        } else {
            h[i] = p.coords[slot++];
        }
    }
    return h;
}

}  // namespace

ChartPoint other_chart(const ChartPoint& p) {
    if (p.dim != 1) throw ValidationError("other_chart: only m=1 has a two-chart atlas here");
    ChartPoint q;
    q.dim = 1;
    q.chart = 1 - p.chart;
    q.coords[0] = Complex{1.0, 0.0} / p.coords[0];
    return q;
}

Complex to_chart0(const ChartPoint& p) {
    if (p.dim != 1) throw ValidationError("to_chart0: m=1 only");
    return p.chart == 0 ? p.coords[0] : Complex{1.0, 0.0} / p.coords[0];
}

double fs_distance(const ChartPoint& a, const ChartPoint& b) {
    const int dim = a.dim;
    if (dim != b.dim) throw ValidationError("fs_distance: dimension mismatch");
    const auto ha = lift(a);
    const auto hb = lift(b);
    Complex inner{0.0, 0.0};
    double na = 0.0, nb = 0.0;
    for (int i = 0; i <= dim; ++i) {
        inner += ha[i] * std::conj(hb[i]);
        na += std::norm(ha[i]);
        nb += std::norm(hb[i]);
    }
    const double c = std::clamp(std::abs(inner) / std::sqrt(na * nb), 0.0, 1.0);
    return std::acos(c);
}

double p_kernel(const ChartPoint& a, const ChartPoint& b, int N) {
    const double c = std::cos(fs_distance(a, b));
    if (c <= 0.0) return 0.0;
    return std::exp(static_cast<double>(N) * std::log(c));
}

Complex covariance_entry(const ChartPoint& a, const ChartPoint& b, int N) {
    if (a.chart != 0 || b.chart != 0) throw ValidationError("covariance_entry: chart-0 points required");
    if (a.dim != b.dim) throw ValidationError("covariance_entry: dimension mismatch");
    Complex inner{1.0, 0.0};
    for (int i = 0; i < a.dim; ++i) inner += a.coords[i] * std::conj(b.coords[i]);
    // exp(N log(1+z.w-bar) - (N/2)(log(1+|z|^2) + log(1+|w|^2))), evaluated in
    // log space so large N cannot overflow.
    const double mag = std::abs(inner);
    if (mag == 0.0) return Complex{0.0, 0.0};
    const double logmod = N * std::log(mag) -
                          0.5 * N * (std::log1p(a.norm_sq()) + std::log1p(b.norm_sq()));
    const double phase = N * std::arg(inner);
    return std::polar(std::exp(logmod), phase);
}

}  // namespace cpzeros
