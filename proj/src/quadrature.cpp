#include "cpzeros/quadrature.hpp"

#include <cmath>

namespace cpzeros {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    // Newton iteration on P_n from the Chebyshev initial guess
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

namespace {

struct GlRule {
    std::vector<double> x, w;  // on [-1, 1]
};

const GlRule& cached_rule(int n) {
    static thread_local int cached_n = 0;
    static thread_local GlRule rule;
    if (cached_n != n) {
        gauss_legendre(n, rule.x, rule.w);
        cached_n = n;
    }
    return rule;
}

// One polar panel [r0,r1] x [t0,t1] around `origin`, with radial density
// `rho(r)` (r/(1+r^2)^2 for FS volume, r for Lebesgue).  GL nodes radially,
// midpoint nodes angularly; dyadic split near singular points.  Non-finite
// integrand values (exact hits of a log singularity) contribute zero.
template <class Density, class Fn>
void panel_value(Complex origin, double r0, double r1, double t0, double t1, int depth,
                 const QuadratureGrid& g, std::span<const Complex> singular, const Density& rho,
                 const Fn& f, double& acc_signed, double& acc_abs) {
    if (depth < g.refine_depth && !singular.empty()) {
        const double rc = 0.5 * (r0 + r1), tc = 0.5 * (t0 + t1);
        const Complex center = origin + std::polar(rc, tc);
        const double half_diag =
            0.5 * std::hypot(r1 - r0, std::max(rc, 0.05) * (t1 - t0));
        bool near = false;
        for (const Complex& s : singular) {
            if (std::abs(s - center) <= g.refine_reach * 2.0 * half_diag + half_diag) {
                near = true;
                break;
            }
        }
        if (near) {
            const double rm = 0.5 * (r0 + r1), tm = 0.5 * (t0 + t1);
            panel_value(origin, r0, rm, t0, tm, depth + 1, g, singular, rho, f, acc_signed, acc_abs);
            panel_value(origin, r0, rm, tm, t1, depth + 1, g, singular, rho, f, acc_signed, acc_abs);
            panel_value(origin, rm, r1, t0, tm, depth + 1, g, singular, rho, f, acc_signed, acc_abs);
            panel_value(origin, rm, r1, tm, t1, depth + 1, g, singular, rho, f, acc_signed, acc_abs);
            return;
        }
    }
    const int p = g.points_per_cell;
    const GlRule& rule = cached_rule(p);
    const double rh = 0.5 * (r1 - r0), rc = 0.5 * (r0 + r1);
    const double dt = (t1 - t0) / p;
    for (int i = 0; i < p; ++i) {
        const double r = rc + rh * rule.x[i];
        const double wr = rh * rule.w[i] * rho(r);
        for (int j = 0; j < p; ++j) {
            const double t = t0 + (j + 0.5) * dt;
            const double v = f(origin + std::polar(r, t));
            if (std::isfinite(v)) {
                acc_signed += wr * dt * v;
                acc_abs += wr * dt * std::abs(v);
            }
        }
    }
}

struct PanelId {
    int chart;
    int ir, it;
};

template <class Density, class Fn>
std::pair<double, double> polar_integrate(Complex origin, double r_lo, double r_hi,
                                          const QuadratureGrid& g,
                                          std::span<const Complex> singular, const Density& rho,
                                          const Fn& f, int threads) {
    const int nr = g.radial_cells, na = g.angular_cells;
    std::vector<double> signed_parts(static_cast<std::size_t>(nr) * na, 0.0);
    std::vector<double> abs_parts(static_cast<std::size_t>(nr) * na, 0.0);
    const double dr = (r_hi - r_lo) / nr;
    const double dt = 2.0 * kPi / na;
    parallel_for(static_cast<std::int64_t>(nr) * na, threads, [&](std::int64_t k) {
        const int ir = static_cast<int>(k / na);
        const int it = static_cast<int>(k % na);
        double s = 0.0, a = 0.0;
        panel_value(origin, r_lo + ir * dr, r_lo + (ir + 1) * dr, it * dt, (it + 1) * dt, 0, g,
                    singular, rho, f, s, a);
        signed_parts[k] = s;
        abs_parts[k] = a;
    });
    return {pairwise_sum(signed_parts), pairwise_sum(abs_parts)};
}

double fs_density(double r) {
    const double q = 1.0 + r * r;
    return r / (q * q);
}

// singular points of the other chart that matter for this chart's unit disc
std::vector<Complex> chart_singular(std::span<const Complex> singular_chart0, int chart) {
    std::vector<Complex> out;
    for (const Complex& z : singular_chart0) {
        const Complex zc = chart == 0 ? z : (z == Complex{0.0, 0.0} ? Complex{1e30, 0.0}
                                                                    : Complex{1.0, 0.0} / z);
        if (std::abs(zc) <= 1.3) out.push_back(zc);
    }
    return out;
}

template <class F>
std::pair<double, double> cp1_integrate(const F& f, const QuadratureGrid& g,
                                        std::span<const Complex> singular, int threads,
                                        bool force_serial) {
    double s = 0.0, a = 0.0;
    for (int chart = 0; chart < 2; ++chart) {
        const auto sing = chart_singular(singular, chart);
        auto fn = [&, chart](Complex z) { return f(chart, z); };
        const auto part =
            polar_integrate(Complex{0.0, 0.0}, 0.0, 1.0, g, sing, fs_density, fn,
                            force_serial ? 1 : threads);
        s += part.first;
        a += part.second;
    }
    return {s, a};
}

}  // namespace

double integrate_cp1(const ChartIntegrand& f, const QuadratureGrid& g,
                     std::span<const Complex> singular, int threads) {
    return cp1_integrate(f, g, singular, threads, false).first;
}

double integrate_cp1_serial(const ChartIntegrand& f, const QuadratureGrid& g,
                            std::span<const Complex> singular) {
    return cp1_integrate(f, g, singular, 1, true).first;
}

std::pair<double, double> integrate_cp1_signed_abs(const ChartIntegrand& f,
                                                   const QuadratureGrid& g,
                                                   std::span<const Complex> singular, int threads) {
    return cp1_integrate(f, g, singular, threads, false);
}

double integrate_annulus(Complex center, double r_lo, double r_hi,
                         const std::function<double(Complex)>& f, const QuadratureGrid& g,
                         std::span<const Complex> singular, int threads) {
    if (!(r_hi > r_lo) || r_lo < 0.0) throw ValidationError("integrate_annulus: bad radii");
    return polar_integrate(center, r_lo, r_hi, g, singular, [](double r) { return r; }, f, threads)
        .first;
}

double integrate_disc(Complex center, double r, const std::function<double(Complex)>& f,
                      const QuadratureGrid& g, std::span<const Complex> singular, int threads) {
    if (r <= 0.0) throw ValidationError("integrate_disc: bad radius");
    return polar_integrate(center, 0.0, r, g, singular, [](double rr) { return rr; }, f, threads)
        .first;
}

void foreach_cp1_node(const QuadratureGrid& g,
                      const std::function<void(int, Complex, double)>& fn) {
    const GlRule& rule = cached_rule(g.points_per_cell);
    const int p = g.points_per_cell;
    const double dr = 1.0 / g.radial_cells;
    const double dt = 2.0 * kPi / g.angular_cells;
    for (int chart = 0; chart < 2; ++chart)
        for (int ir = 0; ir < g.radial_cells; ++ir)
            for (int i = 0; i < p; ++i) {
                const double r = (ir + 0.5 + 0.5 * rule.x[i]) * dr;
                const double wr = 0.5 * dr * rule.w[i] * fs_density(r);
                for (int it = 0; it < g.angular_cells; ++it)
                    for (int j = 0; j < p; ++j) {
                        const double t = (it + (j + 0.5) / p) * dt;
                        fn(chart, std::polar(r, t), wr * dt / p);
                    }
            }
}

void foreach_cp2_node(const QuadratureGrid& g,
                      const std::function<void(int, Complex, Complex, double)>& fn) {
    // radial_cells = GL nodes per radial axis, angular_cells = midpoint nodes
    // per angle axis (points_per_cell is not used for the 4-d rule)
    const int nr = g.radial_cells, na = g.angular_cells;
    GlRule rule;
    gauss_legendre(nr, rule.x, rule.w);
    const double dt = 2.0 * kPi / na;
    for (int chart = 0; chart < 3; ++chart)
        for (int i1 = 0; i1 < nr; ++i1) {
            const double r1 = 0.5 * (1.0 + rule.x[i1]);
            const double w1 = 0.5 * rule.w[i1] * r1;
            for (int i2 = 0; i2 < nr; ++i2) {
                const double r2 = 0.5 * (1.0 + rule.x[i2]);
                const double w2 = 0.5 * rule.w[i2] * r2;
                const double q = 1.0 + r1 * r1 + r2 * r2;
                const double wr = w1 * w2 / (q * q * q) * dt * dt;
                for (int j1 = 0; j1 < na; ++j1)
                    for (int j2 = 0; j2 < na; ++j2)
                        fn(chart, std::polar(r1, (j1 + 0.5) * dt), std::polar(r2, (j2 + 0.5) * dt),
                           wr);
            }
        }
}

double integrate_cp2_ball(double radius, const std::function<double(Complex, Complex)>& f,
                          const QuadratureGrid& g) {
    if (radius <= 0.0) throw ValidationError("integrate_cp2_ball: bad radius");
    // polar radius in [0, radius] with the solid-angle split of C^2 = R^4:
    // z1 = s cos(chi) e^{i p1}, z2 = s sin(chi) e^{i p2},
    // dV_4 = s^3 sin(chi) cos(chi) ds dchi dp1 dp2
    const int ns = g.radial_cells, nc = std::max(8, g.radial_cells / 2), na = g.angular_cells;
    GlRule rs, rc;
    gauss_legendre(ns, rs.x, rs.w);
    gauss_legendre(nc, rc.x, rc.w);
    const double dt = 2.0 * kPi / na;
    double acc = 0.0;
    for (int i = 0; i < ns; ++i) {
        const double s = 0.5 * radius * (1.0 + rs.x[i]);
        const double ws = 0.5 * radius * rs.w[i] * s * s * s;
        const double q = 1.0 + s * s;
        const double fsw = 1.0 / (q * q * q);
        for (int j = 0; j < nc; ++j) {
            const double chi = 0.25 * kPi * (1.0 + rc.x[j]);
            const double wc = 0.25 * kPi * rc.w[j] * std::sin(chi) * std::cos(chi);
            for (int k1 = 0; k1 < na; ++k1)
                for (int k2 = 0; k2 < na; ++k2) {
                    const double v = f(std::polar(s * std::cos(chi), (k1 + 0.5) * dt),
                                       std::polar(s * std::sin(chi), (k2 + 0.5) * dt));
                    if (std::isfinite(v)) acc += ws * wc * dt * dt * fsw * v;
                }
        }
    }
    return acc;
}

}  // namespace cpzeros
