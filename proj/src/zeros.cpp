#include "cpzeros/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cpzeros {

namespace {

// p and p' by one Horner pass.
void horner2(std::span<const Complex> a, Complex z, Complex& p, Complex& dp) {
    p = Complex{0.0, 0.0};
    dp = Complex{0.0, 0.0};
    for (std::size_t j = a.size(); j-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[j];
    }
}

// Newton ratio p(z)/p'(z), evaluated through the reversed polynomial at 1/z
// when |z| > 1 so intermediates stay bounded.
Complex newton_ratio(std::span<const Complex> a, std::span<const Complex> rev, Complex z,
                     bool& at_root) {
    const int d = static_cast<int>(a.size()) - 1;
    at_root = false;
    if (std::abs(z) <= 1.0) {
        Complex p, dp;
        horner2(a, z, p, dp);
        if (p == Complex{0.0, 0.0}) {
            at_root = true;
            return {};
        }
        if (dp == Complex{0.0, 0.0}) return Complex{1e-3, 1e-3};  // nudge off a critical point
        return p / dp;
    }
    const Complex w = Complex{1.0, 0.0} / z;
    Complex q, dq;
    horner2(rev, w, q, dq);
    if (q == Complex{0.0, 0.0}) {
        at_root = true;
        return {};
    }
    // log p = d log z + log q(1/z)  =>  p'/p = d w - w^2 q'/q
    const Complex r = static_cast<double>(d) * w - w * w * dq / q;
    if (r == Complex{0.0, 0.0}) return Complex{1e-3, 1e-3};
    return Complex{1.0, 0.0} / r;
}

// Relative backward error |p(z)| / sum_j |a_j| |z|^j, computed in the chart
// where |coordinate| <= 1.
double relative_residual(std::span<const Complex> a, std::span<const Complex> rev, Complex z) {
    const bool rev_side = std::abs(z) > 1.0;
    const Complex zc = rev_side ? Complex{1.0, 0.0} / z : z;
    std::span<const Complex> c = rev_side ? rev : a;
    Complex p{0.0, 0.0};
    double scale = 0.0;
    const double r = std::abs(zc);
    for (std::size_t j = c.size(); j-- > 0;) {
        p = p * zc + c[j];
        scale = scale * r + std::abs(c[j]);
    }
    if (scale == 0.0) return 0.0;
    return std::abs(p) / scale;
}

Complex polish_newton(std::span<const Complex> a, std::span<const Complex> rev, Complex z,
                      int steps) {
    for (int s = 0; s < steps; ++s) {
        bool at_root = false;
        const Complex u = newton_ratio(a, rev, z, at_root);
        if (at_root) break;
        z -= u;
    }
    return z;
}

constexpr double kGoldenAngle = 2.39996322972865332;

}  // namespace

bool AberthSolver::aberth_pass(std::span<const Complex> a, int attempt) {
    const int d = static_cast<int>(a.size()) - 1;
    const double scale = std::pow(std::abs(a[0]) / std::abs(a[d]), 1.0 / d);
    const double r0 = std::clamp(scale, 1e-3, 1e3) * std::pow(1.6, attempt);
    roots_.resize(d);
    done_.assign(d, false);
    for (int k = 0; k < d; ++k)
        roots_[k] = std::polar(r0, 0.4 + 0.7 * attempt + kGoldenAngle * k);

    for (int iter = 0; iter < max_iterations; ++iter) {
        int converged = 0;
        for (int i = 0; i < d; ++i) {
            if (done_[i]) {
                ++converged;
                continue;
            }
            bool at_root = false;
            const Complex u = newton_ratio(a, rev_, roots_[i], at_root);
            if (at_root) {
                done_[i] = true;
                ++converged;
                continue;
            }
            Complex s{0.0, 0.0};
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                const Complex diff = roots_[i] - roots_[j];
                if (diff == Complex{0.0, 0.0}) continue;  // collision: plain Newton step
                s += Complex{1.0, 0.0} / diff;
            }
            const Complex denom = Complex{1.0, 0.0} - u * s;
            const Complex step = denom == Complex{0.0, 0.0} ? u : u / denom;
            roots_[i] -= step;
            if (std::abs(step) <= newton_tol * (1.0 + std::abs(roots_[i]))) {
                done_[i] = true;
                ++converged;
            }
        }
        if (converged == d) return true;
    }
    return false;
}

void AberthSolver::companion_qr(std::span<const Complex> a) {
    // shifted QR with Givens rotations on the (already Hessenberg) companion
    // matrix of the monic polynomial
    const int d = static_cast<int>(a.size()) - 1;
    std::vector<Complex> h(static_cast<std::size_t>(d) * d, Complex{0.0, 0.0});
    auto H = [&](int i, int j) -> Complex& { return h[static_cast<std::size_t>(i) * d + j]; };
    for (int i = 0; i + 1 < d; ++i) H(i + 1, i) = Complex{1.0, 0.0};
    for (int i = 0; i < d; ++i) H(i, d - 1) = -a[i] / a[d];

    roots_.assign(d, Complex{0.0, 0.0});
    int active = d;
    int stagnation = 0;
    const int cap = 60 * d;
    std::vector<Complex> gc(d), gs(d);
    for (int iter = 0; iter < cap && active > 0; ++iter) {
        if (active == 1) {
            roots_[0] = H(0, 0);
            active = 0;
            break;
        }
        // deflation check on the lowest subdiagonal of the active window
        const double sub = std::abs(H(active - 1, active - 2));
        if (sub <= 1e-15 * (std::abs(H(active - 2, active - 2)) + std::abs(H(active - 1, active - 1)))) {
            roots_[active - 1] = H(active - 1, active - 1);
            --active;
            stagnation = 0;
            continue;
        }
        // Wilkinson shift: trailing 2x2 eigenvalue nearest the corner entry
        const Complex h11 = H(active - 2, active - 2), h12 = H(active - 2, active - 1);
        const Complex h21 = H(active - 1, active - 2), h22 = H(active - 1, active - 1);
        const Complex tr = h11 + h22;
        const Complex det = h11 * h22 - h12 * h21;
        const Complex disc = std::sqrt(tr * tr - 4.0 * det);
        Complex mu1 = 0.5 * (tr + disc), mu2 = 0.5 * (tr - disc);
        Complex mu = std::abs(mu1 - h22) < std::abs(mu2 - h22) ? mu1 : mu2;
        if (++stagnation > 12) {  // exceptional shift to break limit cycles
            mu += Complex{0.5, 0.25} * std::abs(h21);
            stagnation = 0;
        }
        for (int i = 0; i < active; ++i) H(i, i) -= mu;
        // QR sweep: annihilate the subdiagonal with Givens rotations
        for (int k = 0; k + 1 < active; ++k) {
            const Complex x = H(k, k), y = H(k + 1, k);
            const double nrm = std::sqrt(std::norm(x) + std::norm(y));
            if (nrm == 0.0) {
                gc[k] = Complex{1.0, 0.0};
                gs[k] = Complex{0.0, 0.0};
                continue;
            }
            const Complex c = x / nrm, s = y / nrm;
            gc[k] = c;
            gs[k] = s;
            for (int j = k; j < active; ++j) {
                const Complex t1 = H(k, j), t2 = H(k + 1, j);
                H(k, j) = std::conj(c) * t1 + std::conj(s) * t2;
                H(k + 1, j) = -s * t1 + c * t2;
            }
        }
        // RQ: apply the rotations on the right
        for (int k = 0; k + 1 < active; ++k) {
            for (int i = 0; i <= std::min(k + 1, active - 1); ++i) {
                const Complex t1 = H(i, k), t2 = H(i, k + 1);
                H(i, k) = t1 * gc[k] + t2 * gs[k];
                H(i, k + 1) = -t1 * std::conj(gs[k]) + t2 * std::conj(gc[k]);
            }
        }
        for (int i = 0; i < active; ++i) H(i, i) += mu;
    }
    if (active > 0) throw NumericError("find_roots: companion QR did not converge");
}

RootSet AberthSolver::solve(std::span<const Complex> coeffs) {
    for (const Complex& c : coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw NumericError("find_roots: non-finite coefficients");

    const int N = static_cast<int>(coeffs.size()) - 1;
    RootSet out;

    // exact zero leading coefficients are zeros at infinity
    int deg = N;
    while (deg > 0 && coeffs[deg] == Complex{0.0, 0.0}) --deg;
    out.degree_at_infinity = N - deg;
    if (deg == 0) {
        if (coeffs[0] == Complex{0.0, 0.0}) throw NumericError("find_roots: zero polynomial");
        return out;
    }
    // exact zero trailing coefficients are roots at the origin
    int low = 0;
    while (low < deg && coeffs[low] == Complex{0.0, 0.0}) ++low;
    for (int i = 0; i < low; ++i) {
        out.roots.push_back(Complex{0.0, 0.0});
        out.residuals.push_back(0.0);
    }

    work_.assign(coeffs.begin() + low, coeffs.begin() + deg + 1);
    const int d = deg - low;
    if (d > 0) {
        rev_.assign(work_.rbegin(), work_.rend());
        bool ok = false;
        for (int attempt = 0; attempt <= restarts && !ok; ++attempt) ok = aberth_pass(work_, attempt);
        if (!ok) companion_qr(work_);

        for (Complex z : roots_) {
            // polish in the stable chart; near the seam reconcile both charts
            Complex best = polish_newton(work_, rev_, z, 2);
            double res = relative_residual(work_, rev_, best);
            const double mag = std::abs(best);
            if (mag > 0.5 && mag < 2.0) {
                Complex w = polish_newton(rev_, work_, Complex{1.0, 0.0} / best, 2);
                if (w != Complex{0.0, 0.0}) {
                    const Complex alt = Complex{1.0, 0.0} / w;
                    const double alt_res = relative_residual(work_, rev_, alt);
                    if (alt_res < res) {
                        best = alt;
                        res = alt_res;
                    }
                }
            }
            if (std::abs(best) > infinity_threshold) {
                ++out.degree_at_infinity;
            } else {
                out.roots.push_back(best);
                out.residuals.push_back(res);
            }
        }
    }
    return out;
}

RootSet find_roots(const PolySection& s) {
    if (s.spec.m != 1) throw ValidationError("find_roots: m=1 only");
    AberthSolver solver;
    return solver.solve(weighted_coeffs(s));
}

int count_in_domain(const RootSet& rs, const DomainSpec& d) {
    int count = 0;
    for (const Complex& z : rs.roots)
        if (d.contains(z)) ++count;
    if (d.contains_infinity()) count += rs.degree_at_infinity;
    return count;
}

double nevanlinna_count(const RootSet& rs, double r) {
    return static_cast<double>(count_in_domain(rs, DomainSpec::disk(Complex{0.0, 0.0}, r)));
}

namespace {

bool grid_point_in_domain(const DomainSpec& d, int chart, Complex zc) {
    if (chart == 0) return d.contains(zc);
    if (zc == Complex{0.0, 0.0}) return d.contains_infinity();
    return d.contains(Complex{1.0, 0.0} / zc);
}

}  // namespace

double max_modulus(const PolySection& s, const DomainSpec& d, int levels) {
    if (s.spec.m != 1) throw ValidationError("max_modulus: m=1 only");
    const int N = s.spec.degree;
    const double h0 = kPi / (4.0 * std::sqrt(static_cast<double>(N)));

    double best = -1.0;
    int best_chart = 0;
    Complex best_z{0.0, 0.0};
    auto consider = [&](int chart, Complex zc) {
        if (!grid_point_in_domain(d, chart, zc)) return;
        const double v = hermitian_norm(s, ChartPoint::c1(zc, chart));
        if (v > best) {
            best = v;
            best_chart = chart;
            best_z = zc;
        }
    };

    const int span = static_cast<int>(std::ceil(1.02 / h0));
    for (int chart = 0; chart < 2; ++chart)
        for (int i = -span; i <= span; ++i)
            for (int j = -span; j <= span; ++j) {
                const Complex zc{i * h0, j * h0};
                if (std::abs(zc) <= 1.02) consider(chart, zc);
            }
    // seed points guarantee a start inside small domains
    if (d.kind != DomainSpec::Kind::complement) consider(0, d.center);
    if (d.kind == DomainSpec::Kind::annulus)
        consider(0, d.center + Complex{0.5 * (d.r_inner + d.r_outer), 0.0});
    if (d.contains_infinity()) consider(1, Complex{0.0, 0.0});
    if (best < 0.0) throw ValidationError("max_modulus: domain contains no grid point");

    double h = h0;
    for (int level = 0; level < levels; ++level) {
        h *= 0.25;
        const int chart = best_chart;
        const Complex center = best_z;
        for (int i = -4; i <= 4; ++i)
            for (int j = -4; j <= 4; ++j) consider(chart, center + Complex{i * h, j * h});
    }
    return best;
}

std::string rootset_to_csv(const RootSet& rs) {
    std::ostringstream os;
    os.precision(17);
    os << "# degree_at_infinity=" << rs.degree_at_infinity << "\n";
    os << "re,im,residual\n";
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        os << rs.roots[i].real() << "," << rs.roots[i].imag() << "," << rs.residuals[i] << "\n";
    return os.str();
}

}  // namespace cpzeros
