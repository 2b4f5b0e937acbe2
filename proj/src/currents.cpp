#include "cpzeros/currents.hpp"

#include <algorithm>
#include <cmath>

#include "cpzeros/zeros.hpp"

namespace cpzeros {

namespace {

// quintic smoothstep and derivatives on [0,1]
inline double smood(double x) { return x * x * x * (10.0 + x * (-15.0 + 6.0 * x)); }
inline double smood1(double x) { return 30.0 * x * x * (x - 1.0) * (x - 1.0); }
inline double smood2(double x) { return 60.0 * x * (2.0 * x - 1.0) * (x - 1.0); }

// value/first/second derivative of one edge at rho
void edge_eval(const TestFunction::Edge& e, double rho, double& v, double& d1, double& d2) {
    if (rho <= e.lo) {
        v = e.rising ? 0.0 : 1.0;
        d1 = d2 = 0.0;
        return;
    }
    if (rho >= e.hi) {
        v = e.rising ? 1.0 : 0.0;
        d1 = d2 = 0.0;
        return;
    }
    const double w = e.hi - e.lo;
    const double x = (rho - e.lo) / w;
    if (e.rising) {
        v = smood(x);
        d1 = smood1(x) / w;
        d2 = smood2(x) / (w * w);
    } else {
        v = smood(1.0 - x);
        d1 = -smood1(1.0 - x) / w;
        d2 = smood2(1.0 - x) / (w * w);
    }
}

}  // namespace

TestFunction TestFunction::constant_one(int m) {
    TestFunction t;
    t.dim_ = m;
    t.one_ = true;
    return t;
}

double TestFunction::radial_value(double rho) const {
    if (one_) return 1.0;
    double v = 1.0;
    for (const Edge& e : edges_) {
        double ev, d1, d2;
        edge_eval(e, rho, ev, d1, d2);
        v *= ev;
    }
    return v;
}

double TestFunction::radial_laplacian(double rho) const {
    if (one_) return 0.0;
    // product profile f = prod f_k; Lap = f'' + (2m-1)/rho f'
    double v = 1.0, d1 = 0.0, d2 = 0.0;
    for (const Edge& e : edges_) {
        double ev, e1, e2;
        edge_eval(e, rho, ev, e1, e2);
        d2 = d2 * ev + 2.0 * d1 * e1 + v * e2;
        d1 = d1 * ev + v * e1;
        v *= ev;
    }
    if (rho < 1e-12) return 0.0;  // profiles are flat at the center
    return d2 + (2.0 * dim_ - 1.0) * d1 / rho;
}

double TestFunction::value(Complex z) const { return one_ ? 1.0 : radial_value(std::abs(z - center_)); }

double TestFunction::laplacian(Complex z) const {
    return one_ ? 0.0 : radial_laplacian(std::abs(z - center_));
}

double TestFunction::value_at_infinity() const {
    if (one_) return 1.0;
    double v = 1.0;
    for (const Edge& e : edges_) v *= e.rising ? 1.0 : 0.0;
    return v;
}

double TestFunction::value_chart(int chart, Complex zc) const {
    if (one_) return 1.0;
    if (chart == 0) return value(zc);
    if (zc == Complex{0.0, 0.0}) return value_at_infinity();
    return value(Complex{1.0, 0.0} / zc);
}

double TestFunction::value2(Complex z1, Complex z2) const {
    return one_ ? 1.0 : radial_value(std::sqrt(std::norm(z1) + std::norm(z2)));
}

double TestFunction::laplacian2(Complex z1, Complex z2) const {
    return one_ ? 0.0 : radial_laplacian(std::sqrt(std::norm(z1) + std::norm(z2)));
}

TestFunction smooth_indicator(const DomainSpec& d, double width, TestFunction::Side side, int m) {
    if (width <= 0.0) throw ValidationError("smooth_indicator: width must be positive");
    using Side = TestFunction::Side;
    using Edge = TestFunction::Edge;
    DomainSpec base = d;
    if (d.kind == DomainSpec::Kind::fs_cap) {
        if (d.r_outer >= 0.5 * kPi) return TestFunction::constant_one(m);  // whole manifold
        if (d.contains_infinity())
            throw ValidationError("smooth_indicator: cap contains infinity; use a complement domain");
        base = d.as_euclidean_disk();
    }
    TestFunction t;
    t.dim_ = m;
    t.base_ = base;
    t.center_ = base.center;
    if (m == 2 && (base.kind != DomainSpec::Kind::euclidean_disk || std::abs(base.center) != 0.0))
        throw ValidationError("smooth_indicator: m=2 supports origin-centered balls only");
    switch (base.kind) {
        case DomainSpec::Kind::euclidean_disk: {
            const double R = base.r_outer;
            if (width >= R) throw ValidationError("smooth_indicator: width too large for disk");
            t.edges_.push_back(side == Side::inner ? Edge{R - width, R, false}
                                                   : Edge{R, R + width, false});
            break;
        }
        case DomainSpec::Kind::complement: {
            const double R = base.r_outer;
            if (side == Side::outer && width >= R)
                throw ValidationError("smooth_indicator: width too large for complement");
            t.edges_.push_back(side == Side::inner ? Edge{R, R + width, true}
                                                   : Edge{R - width, R, true});
            break;
        }
        case DomainSpec::Kind::annulus: {
            const double ri = base.r_inner, ro = base.r_outer;
            if (side == Side::inner) {
                if (2.0 * width >= ro - ri)
                    throw ValidationError("smooth_indicator: width too large for annulus");
                t.edges_.push_back(Edge{ri, ri + width, true});
                t.edges_.push_back(Edge{ro - width, ro, false});
            } else {
                if (width >= ri) throw ValidationError("smooth_indicator: width too large for annulus");
                t.edges_.push_back(Edge{ri - width, ri, true});
                t.edges_.push_back(Edge{ro, ro + width, false});
            }
            break;
        }
        case DomainSpec::Kind::fs_cap:
            break;  // converted above
    }
    return t;
}

namespace {

std::vector<Complex> roots_near_band(std::span<const Complex> roots, Complex center, double lo,
                                     double hi) {
    std::vector<Complex> out;
    for (const Complex& r : roots) {
        const double rho = std::abs(r - center);
        if (rho > lo - 0.3 * (hi - lo) - 0.05 && rho < hi + 0.3 * (hi - lo) + 0.05)
            out.push_back(r);
    }
    return out;
}

LogIntegral integrate_log_modulus_once(const SectionEvaluator& ev, const QuadratureGrid& g,
                                       std::span<const Complex> roots, double log_shift,
                                       int threads) {
    const auto pair = integrate_cp1_signed_abs(
        [&](int chart, Complex z) { return ev.log_hnorm(chart, z) + log_shift; }, g, roots,
        threads);
    return {pair.first, pair.second};
}

}  // namespace

LogIntegral integrate_log_modulus(const PolySection& s, const QuadratureGrid& g,
                                  std::span<const Complex> roots, double log_shift, int threads) {
    if (s.spec.m != 1) throw ValidationError("integrate_log_modulus: m=1 (use the ball variant for m=2)");
    const SectionEvaluator ev(s);
    const LogIntegral fine = integrate_log_modulus_once(ev, g, roots, log_shift, threads);
    if (g.check_convergence) {
        const LogIntegral coarse =
            integrate_log_modulus_once(ev, QuadratureGrid::coarser(g), roots, log_shift, threads);
        const double scale = 1.0 + std::abs(fine.signed_part) + fine.absolute;
        if (std::abs(fine.signed_part - coarse.signed_part) > g.convergence_tol * scale ||
            std::abs(fine.absolute - coarse.absolute) > g.convergence_tol * scale)
            throw NumericError("integrate_log_modulus: refinement levels disagree");
    }
    return fine;
}

LogIntegral integrate_log_modulus_ball2(const PolySection& s, double radius,
                                        const QuadratureGrid& g) {
    if (s.spec.m != 2) throw ValidationError("integrate_log_modulus_ball2: m=2 only");
    const SectionEvaluator2 ev(s);
    double signed_part = 0.0, absolute = 0.0;
    // one pass accumulating both; non-finite hits are skipped inside
    signed_part = integrate_cp2_ball(
        radius, [&](Complex z1, Complex z2) { return ev.log_hnorm(z1, z2); }, g);
    absolute = integrate_cp2_ball(
        radius, [&](Complex z1, Complex z2) { return std::abs(ev.log_hnorm(z1, z2)); }, g);
    return {signed_part, absolute};
}

// FS mass of psi.  Center-0 radial profiles reduce to 1-d integrals with
// segment boundaries aligned to the transition bands (piecewise-exact); the
// constant function integrates to Vol(CP^1) = pi identically.
double psi_fs_mass(const TestFunction& psi, const QuadratureGrid& g, int threads) {
    if (psi.is_constant_one()) return kPi;
    if (psi.center() != Complex{0.0, 0.0})
        return integrate_cp1([&](int chart, Complex z) { return psi.value_chart(chart, z); }, g,
                             {}, threads);
    static thread_local std::vector<double> gx, gw;
    if (gx.size() != 24) gauss_legendre(24, gx, gw);
    auto const_piece = [](double lo, double hi) {  // 2 pi int r/(1+r^2)^2 dr
        const double a = 1.0 / (1.0 + lo * lo);
        const double b = std::isinf(hi) ? 0.0 : 1.0 / (1.0 + hi * hi);
        return kPi * (a - b);
    };
    double mass = 0.0;
    double prev = 0.0;
    for (const TestFunction::Edge& e : psi.edges()) {
        if (e.lo > prev) {
            const double level = psi.radial_value(0.5 * (prev + e.lo));  // constant there
            if (level > 0.0) mass += level * const_piece(prev, e.lo);
        }
        const double c = 0.5 * (e.lo + e.hi), h = 0.5 * (e.hi - e.lo);
        for (std::size_t i = 0; i < gx.size(); ++i) {
            const double r = c + h * gx[i];
            const double q = 1.0 + r * r;
            mass += h * gw[i] * psi.radial_value(r) * 2.0 * kPi * r / (q * q);
        }
        prev = e.hi;
    }
    const double tail = psi.value_at_infinity();
    if (tail > 0.0) mass += tail * const_piece(prev, std::numeric_limits<double>::infinity());
    return mass;
}

double pl_linear_statistic(const PolySection& s, const TestFunction& psi, const QuadratureGrid& g,
                           std::span<const Complex> roots, int threads) {
    const int N = s.spec.degree;
    if (s.spec.m == 1) {
        const double mass = psi_fs_mass(psi, g, threads);
        double lap_term = 0.0;
        if (!psi.is_constant_one()) {
            const SectionEvaluator ev(s);
            for (const TestFunction::Edge& e : psi.edges()) {
                const auto sing = roots_near_band(roots, psi.center(), e.lo, e.hi);
                lap_term += integrate_annulus(
                    psi.center(), e.lo, e.hi,
                    [&](Complex z) { return psi.laplacian(z) * ev.log_hnorm(0, z); }, g, sing,
                    threads);
            }
        }
        return (N / kPi) * mass + lap_term / (2.0 * kPi);
    }
    if (s.spec.m != 2) throw ValidationError("pl_linear_statistic: m <= 2");
    if (psi.is_constant_one()) throw ValidationError("pl_linear_statistic: m=2 needs compact psi");
    // pairing against beta = (i/2) d d-bar ||z||^2:  (N/pi) int psi tr(g) dV_4
    // + (1/(2 pi)) int Lap_4 psi log|s|_h dV_4, with tr(g) = (2+u)/(1+u)^2.
    const SectionEvaluator2 ev(s);
    const double reach = psi.edges().empty() ? 0.0 : psi.edges().back().hi;
    const double mass = integrate_cp2_ball(
        reach,
        [&](Complex z1, Complex z2) {
            const double u = std::norm(z1) + std::norm(z2);
            const double q = 1.0 + u;
            // undo the FS volume density of the ball rule, apply omega ^ beta
            return psi.value2(z1, z2) * (2.0 + u) / (q * q) * (q * q * q);
        },
        g);
    const double lap = integrate_cp2_ball(
        reach,
        [&](Complex z1, Complex z2) {
            const double u = std::norm(z1) + std::norm(z2);
            const double q = 1.0 + u;
            return psi.laplacian2(z1, z2) * ev.log_hnorm(z1, z2) * (q * q * q);
        },
        g);
    return (N / kPi) * mass + lap / (2.0 * kPi);
}

Sandwich volume_sandwich(const PolySection& s, const DomainSpec& d, double width,
                         const QuadratureGrid& g, int threads) {
    std::vector<Complex> roots;
    if (s.spec.m == 1) roots = find_roots(s).roots;  // refinement hints only
    const TestFunction inner = smooth_indicator(d, width, TestFunction::Side::inner, s.spec.m);
    const TestFunction outer = smooth_indicator(d, width, TestFunction::Side::outer, s.spec.m);
    return {pl_linear_statistic(s, inner, g, roots, threads),
            pl_linear_statistic(s, outer, g, roots, threads)};
}

SphereAverage sphere_log_minus(const PolySection& s, double r, const QuadratureGrid& g,
                               std::span<const Complex> roots) {
    if (r <= 0.0) throw ValidationError("sphere_log_minus: r > 0 required");
    SphereAverage out;
    if (s.spec.m == 1) {
        const SectionEvaluator ev(s);
        std::vector<double> sing_angles;
        for (const Complex& z : roots) {
            const double gap = std::abs(std::abs(z) - r);
            if (gap < 1e-9 * (1.0 + r)) out.flagged = true;
            if (gap < 0.1 * r) sing_angles.push_back(std::arg(z));
        }
        const int n = std::max(256, g.angular_cells * g.points_per_cell);
        const double dt = 2.0 * kPi / n;
        double acc = 0.0;
        // midpoint panels, dyadically refined near root angles (principal
        // value: a node landing exactly on a zero is skipped)
        auto panel = [&](auto&& self, double t0, double t1, int depth) -> void {
            if (depth < g.refine_depth) {
                const double tc = 0.5 * (t0 + t1);
                for (double a : sing_angles) {
                    double dd = std::remainder(a - tc, 2.0 * kPi);
                    if (std::abs(dd) <= g.refine_reach * (t1 - t0)) {
                        self(self, t0, tc, depth + 1);
                        self(self, tc, t1, depth + 1);
                        return;
                    }
                }
            }
            const double t = 0.5 * (t0 + t1);
            const double v = std::max(-ev.log_hnorm(0, std::polar(r, t)), 0.0);
            if (std::isfinite(v)) acc += v * (t1 - t0);
        };
        for (int k = 0; k < n; ++k) panel(panel, k * dt, (k + 1) * dt, 0);
        out.value = acc / (2.0 * kPi);
        return out;
    }
    if (s.spec.m != 2) throw ValidationError("sphere_log_minus: m <= 2");
    // 3-sphere of radius r: z1 = r cos(chi) e^{i p1}, z2 = r sin(chi) e^{i p2};
    // invariant probability measure = sin(chi) cos(chi) dchi dp1 dp2 / (2 pi^2)
    const SectionEvaluator2 ev(s);
    const int nc = std::max(16, g.radial_cells / 2);
    const int na = std::max(16, g.angular_cells / 2);
    std::vector<double> gx, gw;
    gauss_legendre(nc, gx, gw);
    const double dt = 2.0 * kPi / na;
    double acc = 0.0;
    for (int i = 0; i < nc; ++i) {
        const double chi = 0.25 * kPi * (1.0 + gx[i]);
        const double wc = 0.25 * kPi * gw[i] * std::sin(chi) * std::cos(chi);
        for (int j1 = 0; j1 < na; ++j1)
            for (int j2 = 0; j2 < na; ++j2) {
                const double v = std::max(
                    -ev.log_hnorm(std::polar(r * std::cos(chi), (j1 + 0.5) * dt),
                                  std::polar(r * std::sin(chi), (j2 + 0.5) * dt)),
                    0.0);
                if (std::isfinite(v)) acc += wc * dt * dt * v;
            }
    }
    out.value = acc / (2.0 * kPi * kPi);
    return out;
}

double poisson_kernel(const ChartPoint& zeta, const ChartPoint& z, double r) {
    if (zeta.dim != z.dim) throw ValidationError("poisson_kernel: dimension mismatch");
    const int m = zeta.dim;
    const double nz = std::sqrt(zeta.norm_sq());
    if (nz >= r) throw ValidationError("poisson_kernel: ||zeta|| < r required");
    double diff = 0.0;
    for (int i = 0; i < m; ++i) diff += std::norm(zeta.coords[i] - z.coords[i]);
    return std::pow(r, 2.0 * m - 2.0) * (r * r - nz * nz) / std::pow(diff, static_cast<double>(m));
}

double fs_volume(int m, const QuadratureGrid& g) {
    if (m == 1) return integrate_cp1([](int, Complex) { return 1.0; }, g);
    if (m != 2) throw ValidationError("fs_volume: m in {1,2}");
    double v = 0.0;
    foreach_cp2_node(g, [&](int, Complex, Complex, double w) { v += w; });
    return v;
}

}  // namespace cpzeros
