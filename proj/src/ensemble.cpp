#include "cpzeros/ensemble.hpp"

#include <algorithm>
#include <cmath>

#include "cpzeros/rng.hpp"
#include "json.hpp"

namespace cpzeros {

std::int64_t section_dimension(int m, int N) {
    if (m < 1 || N < 1) throw ValidationError("section_dimension: need m >= 1, N >= 1");
    double d = binomial(N + m, m);
    if (d > 9.0e15) throw ValidationError("section_dimension: d_N too large");
    return static_cast<std::int64_t>(d + 0.5);
}

MultiIndexTable::MultiIndexTable(int m, int N) : m_(m), degree_(N) {
    if (m < 1 || m > 8) throw ValidationError("MultiIndexTable: m out of range");
    if (N < 1) throw ValidationError("MultiIndexTable: N >= 1 required");
    // ascending total degree, then ascending lexicographic tuple order
    for (int d = 0; d <= N; ++d) {
        // enumerate all |J| = d in ascending lex order recursively
        std::vector<int> J(m, 0);
        auto emit = [&](auto&& self, int pos, int rem) -> void {
            if (pos == m - 1) {
                J[pos] = rem;
                entries_.insert(entries_.end(), J.begin(), J.end());
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                J[pos] = v;
                self(self, pos + 1, rem - v);
            }
        };
        emit(emit, 0, d);
    }
    const int n = size();
    log_multi_.resize(n);
    for (int i = 0; i < n; ++i) {
        auto J = (*this)[i];
        double lm = std::lgamma(N + 1.0);
        int total = 0;
        for (int v : J) {
            lm -= std::lgamma(v + 1.0);
            total += v;
        }
        lm -= std::lgamma(N - total + 1.0);
        log_multi_[i] = lm;
    }
}

int MultiIndexTable::total_degree(int i) const {
    auto J = (*this)[i];
    int t = 0;
    for (int v : J) t += v;
    return t;
}

void sample_coeffs_into(const EnsembleSpec& spec, std::uint64_t trial, std::vector<Complex>& out) {
    const std::int64_t d = section_dimension(spec.m, spec.degree);
    out.resize(static_cast<std::size_t>(d));
    for (std::int64_t j = 0; j < d; ++j) {
        out[static_cast<std::size_t>(j)] =
            rng::standard_complex_gaussian(spec.master_seed, trial, static_cast<std::uint64_t>(j));
    }
}

PolySection sample_section(const EnsembleSpec& spec, std::uint64_t trial) {
    PolySection s;
    s.spec = spec;
    s.trial = trial;
    sample_coeffs_into(spec, trial, s.coeffs);
    return s;
}

namespace {

bool all_finite(const std::vector<Complex>& v) {
    for (const Complex& c : v)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

// m=1 Horner with monomial weights sqrt(C(N,j)) folded in by the caller.
Complex horner(std::span<const Complex> a, Complex z) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = a.size(); j-- > 0;) acc = acc * z + a[j];
    return acc;
}

std::vector<Complex> weighted_chart0(const PolySection& s) {
    std::vector<Complex> a;
    weighted_coeffs_into(s, a);
    return a;
}

}  // namespace

void weighted_coeffs_into(const PolySection& s, std::vector<Complex>& a) {
    if (s.spec.m != 1) throw ValidationError("weighted_coeffs: m=1 only");
    const int N = s.spec.degree;
    a.resize(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j)
        a[j] = s.coeffs[j] * std::exp(0.5 * log_binomial(N, j));
}

std::vector<Complex> weighted_coeffs(const PolySection& s) {
    std::vector<Complex> a;
    weighted_coeffs_into(s, a);
    return a;
}

SectionSampler::SectionSampler(const EnsembleSpec& spec) : spec_(spec) {
    if (spec.m != 1) throw ValidationError("SectionSampler: m=1 only");
    weights_.resize(static_cast<std::size_t>(spec.degree) + 1);
    for (int j = 0; j <= spec.degree; ++j)
        weights_[j] = std::exp(0.5 * log_binomial(spec.degree, j));
}

void SectionSampler::sample_weighted(std::uint64_t trial, std::vector<Complex>& a) const {
    a.resize(weights_.size());
    for (std::size_t j = 0; j < weights_.size(); ++j)
        a[j] = weights_[j] * rng::standard_complex_gaussian(spec_.master_seed, trial, j);
}

Complex evaluate_f(const PolySection& s, const ChartPoint& z) {
    const int N = s.spec.degree;
    if (s.spec.m == 1) {
        Complex z0 = to_chart0(z);
        const auto a = weighted_chart0(s);
        Complex value;
        if (std::abs(z0) <= 1.0) {
            value = horner(a, z0);
        } else {
            // f(z) = z^N q(1/z) with q the reversed-coefficient polynomial
            std::vector<Complex> rev(a.rbegin(), a.rend());
            const Complex w = Complex{1.0, 0.0} / z0;
            const Complex q = horner(rev, w);
            const double logmag = N * std::log(std::abs(z0)) + std::log(std::abs(q));
            if (logmag > 700.0) {
                if (!all_finite(s.coeffs)) throw NumericError("evaluate_f: non-finite coefficients");
                return {std::numeric_limits<double>::infinity(), 0.0};
            }
            value = std::pow(z0, N) * q;
        }
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
            if (!all_finite(s.coeffs)) throw NumericError("evaluate_f: non-finite coefficients");
        }
        return value;
    }
    if (z.chart != 0) throw ValidationError("evaluate_f: chart 0 required for m >= 2");
    const MultiIndexTable table(s.spec.m, N);
    Complex acc{0.0, 0.0};
    for (int i = 0; i < table.size(); ++i) {
        auto J = table[i];
        Complex mono{1.0, 0.0};
        for (int k = 0; k < s.spec.m; ++k) {
            for (int p = 0; p < J[k]; ++p) mono *= z.coords[k];
        }
        acc += s.coeffs[i] * std::exp(0.5 * table.log_multinomial(i)) * mono;
    }
    if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag())) {
        if (!all_finite(s.coeffs)) throw NumericError("evaluate_f: non-finite coefficients");
    }
    return acc;
}

double hermitian_norm(const PolySection& s, const ChartPoint& z) {
    const int N = s.spec.degree;
    if (s.spec.m == 1) {
        if (z.dim != 1) throw ValidationError("hermitian_norm: dimension mismatch");
        const auto a = weighted_chart0(s);
        // work in whichever chart keeps the coordinate inside the unit disc
        Complex zc = z.coords[0];
        bool reversed = (z.chart == 1);
        if (std::abs(zc) > 1.0) {
            zc = Complex{1.0, 0.0} / zc;
            reversed = !reversed;
        }
        Complex val;
        if (reversed) {
            std::vector<Complex> rev(a.rbegin(), a.rend());
            val = horner(rev, zc);
        } else {
            val = horner(a, zc);
        }
        const double r = std::abs(val) * std::exp(-0.5 * N * std::log1p(std::norm(zc)));
        if (!std::isfinite(r) && !all_finite(s.coeffs))
            throw NumericError("hermitian_norm: non-finite coefficients");
        return r;
    }
    if (z.chart != 0) throw ValidationError("hermitian_norm: chart 0 required for m >= 2");
    // scaled term sum: each term has modulus <= |c_J|, so nothing overflows
    const MultiIndexTable table(s.spec.m, N);
    const double log1pu = std::log1p(z.norm_sq());
    Complex acc{0.0, 0.0};
    for (int i = 0; i < table.size(); ++i) {
        auto J = table[i];
        double logmag = 0.5 * table.log_multinomial(i) - 0.5 * N * log1pu;
        double phase = 0.0;
        bool zero = false;
        for (int k = 0; k < s.spec.m; ++k) {
            if (J[k] == 0) continue;
            const double r = std::abs(z.coords[k]);
            if (r == 0.0) {
                zero = true;
                break;
            }
            logmag += J[k] * std::log(r);
            phase += J[k] * std::arg(z.coords[k]);
        }
        if (zero) continue;
        acc += s.coeffs[i] * std::polar(std::exp(logmag), phase);
    }
    const double r = std::abs(acc);
    if (!std::isfinite(r) && !all_finite(s.coeffs))
        throw NumericError("hermitian_norm: non-finite coefficients");
    return r;
}

double szego_diagonal(int m, int N) {
    if (m < 1 || N < 1) throw ValidationError("szego_diagonal: need m >= 1, N >= 1");
    return binomial(N + m, m) * std::tgamma(m + 1.0) / std::pow(kPi, m);
}

double szego_diagonal_leading(int m, int N) { return std::pow(static_cast<double>(N) / kPi, m); }

double basis_normalization(int m, int N) { return std::sqrt(szego_diagonal(m, N)); }

double szego_diagonal_basis_sum(int m, int N, const ChartPoint& z) {
    if (z.chart != 0 && m != 1) throw ValidationError("basis_sum: chart 0 required for m >= 2");
    if (m == 1) {
        // sum_j C(N,j) u^j (1+u)^-N via the ratio recurrence: every term is
        // positive and bounded by 1, so the sum is accurate to ~N ulps.
        const Complex z0 = to_chart0(z);
        double u = std::norm(z0);
        if (!std::isfinite(u)) u = 0.0;  // infinity: evaluate in the other chart (u = 0)
        if (u > 1.0) u = 1.0 / u;        // chart swap, sum is invariant
        double term = std::exp(-N * std::log1p(u));
        double sum = term;
        for (int j = 0; j < N; ++j) {
            term *= u * static_cast<double>(N - j) / static_cast<double>(j + 1);
            sum += term;
        }
        return szego_diagonal(m, N) * sum;
    }
    const MultiIndexTable table(m, N);
    const double log1pu = std::log1p(z.norm_sq());
    double sum = 0.0;
    for (int i = 0; i < table.size(); ++i) {
        auto J = table[i];
        double logterm = table.log_multinomial(i) - N * log1pu;
        bool zero = false;
        for (int k = 0; k < m; ++k) {
            if (J[k] == 0) continue;
            const double r2 = std::norm(z.coords[k]);
            if (r2 == 0.0) {
                zero = true;
                break;
            }
            logterm += J[k] * std::log(r2);
        }
        if (!zero) sum += std::exp(logterm);
    }
    return szego_diagonal(m, N) * sum;
}

namespace {

// chart representative of the orthonormal basis element with index i, times
// the Hermitian factor (1+|z|^2)^{-N/2}; m=1 only, either chart.
// In chart 1 the exponent reverses: j -> N - j, same binomial weight.
double basis_h_values_m1(int N, int chart, Complex zc, double gamma, std::vector<Complex>& out) {
    const double hfac = std::exp(-0.5 * N * std::log1p(std::norm(zc)));
    out.resize(static_cast<std::size_t>(N) + 1);
    Complex mono{1.0, 0.0};
    for (int j = 0; j <= N; ++j) {
        const double w = std::exp(0.5 * log_binomial(N, j));
        const int slot = chart == 0 ? j : N - j;
        out[slot] = gamma * w * mono * hfac;
        mono *= zc;
    }
    return hfac;
}

}  // namespace

double orthonormality_defect(int m, int N, const QuadratureGrid& grid) {
    if (m == 1) {
        if (N > 60) throw ValidationError("orthonormality_defect: N too large for quadrature");
        const int d = N + 1;
        const double gamma = basis_normalization(1, N);
        std::vector<Complex> gram(static_cast<std::size_t>(d) * d, Complex{0.0, 0.0});
        std::vector<Complex> b;
        foreach_cp1_node(grid, [&](int chart, Complex z, double w) {
            basis_h_values_m1(N, chart, z, gamma, b);
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) gram[j * d + k] += w * b[j] * std::conj(b[k]);
        });
        double defect = 0.0;
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const double target = (j == k) ? 1.0 : 0.0;
                defect = std::max(defect, std::abs(gram[j * d + k] - target));
            }
        return defect;
    }
    if (m != 2) throw ValidationError("orthonormality_defect: m in {1,2} only");
    if (N > 12) throw ValidationError("orthonormality_defect: m=2 needs small N");
    const MultiIndexTable table(2, N);
    const int d = table.size();
    const double gamma = basis_normalization(2, N);
    std::vector<Complex> gram(static_cast<std::size_t>(d) * d, Complex{0.0, 0.0});
    std::vector<Complex> b(d);
    foreach_cp2_node(grid, [&](int chart, Complex u1, Complex u2, double w) {
        const double hfac = std::exp(-0.5 * N * std::log1p(std::norm(u1) + std::norm(u2)));
        for (int i = 0; i < d; ++i) {
            auto J = table[i];
            // chart c: the plucked homogeneous coordinate swaps exponent slots
            int e1, e2;
            const int j0 = N - (J[0] + J[1]);
            if (chart == 0) {
                e1 = J[0];
                e2 = J[1];
            } else if (chart == 1) {
                e1 = j0;
                e2 = J[1];
            } else {
                e1 = j0;
                e2 = J[0];
            }
            Complex mono{1.0, 0.0};
            for (int p = 0; p < e1; ++p) mono *= u1;
            for (int p = 0; p < e2; ++p) mono *= u2;
            b[i] = gamma * std::exp(0.5 * table.log_multinomial(i)) * mono * hfac;
        }
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) gram[j * d + k] += w * b[j] * std::conj(b[k]);
    });
    double defect = 0.0;
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            const double target = (j == k) ? 1.0 : 0.0;
            defect = std::max(defect, std::abs(gram[j * d + k] - target));
        }
    return defect;
}

SectionEvaluator::SectionEvaluator(const PolySection& s) : degree_(s.spec.degree) {
    weighted_coeffs_into(s, a_);
    rev_.assign(a_.rbegin(), a_.rend());
}

double SectionEvaluator::log_hnorm(int chart, Complex zc) const {
    bool reversed = (chart == 1);
    if (std::abs(zc) > 1.0) {
        zc = Complex{1.0, 0.0} / zc;
        reversed = !reversed;
    }
    const std::vector<Complex>& c = reversed ? rev_ : a_;
    Complex p{0.0, 0.0};
    for (std::size_t j = c.size(); j-- > 0;) p = p * zc + c[j];
    return std::log(std::abs(p)) - 0.5 * degree_ * std::log1p(std::norm(zc));
}

SectionEvaluator2::SectionEvaluator2(const PolySection& s)
    : degree_(s.spec.degree), table_(2, s.spec.degree), coeffs_(s.coeffs) {
    if (s.spec.m != 2) throw ValidationError("SectionEvaluator2: m=2 only");
}

double SectionEvaluator2::log_hnorm(Complex z1, Complex z2) const {
    const double log1pu = std::log1p(std::norm(z1) + std::norm(z2));
    const double lr1 = std::norm(z1) > 0.0 ? std::log(std::abs(z1)) : 0.0;
    const double lr2 = std::norm(z2) > 0.0 ? std::log(std::abs(z2)) : 0.0;
    const double p1 = std::arg(z1), p2 = std::arg(z2);
    Complex acc{0.0, 0.0};
    for (int i = 0; i < table_.size(); ++i) {
        auto J = table_[i];
        if ((J[0] > 0 && std::norm(z1) == 0.0) || (J[1] > 0 && std::norm(z2) == 0.0)) continue;
        const double logmag =
            0.5 * table_.log_multinomial(i) + J[0] * lr1 + J[1] * lr2 - 0.5 * degree_ * log1pu;
        acc += coeffs_[i] * std::polar(std::exp(logmag), J[0] * p1 + J[1] * p2);
    }
    return std::log(std::abs(acc));
}

std::string section_to_json(const PolySection& s) {
    nlohmann::json j;
    j["m"] = s.spec.m;
    j["N"] = s.spec.degree;
    j["seed"] = s.spec.master_seed;
    j["trial"] = s.trial;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Complex& c : s.coeffs) coeffs.push_back({c.real(), c.imag()});
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

PolySection section_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    PolySection s;
    s.spec.m = j.at("m").get<int>();
    s.spec.degree = j.at("N").get<int>();
    s.spec.master_seed = j.at("seed").get<std::uint64_t>();
    s.trial = j.at("trial").get<std::uint64_t>();
    for (const auto& c : j.at("coeffs")) s.coeffs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    const auto expect = section_dimension(s.spec.m, s.spec.degree);
    if (static_cast<std::int64_t>(s.coeffs.size()) != expect)
        throw ValidationError("section_from_json: coefficient count does not match d_N");
    return s;
}

}  // namespace cpzeros
