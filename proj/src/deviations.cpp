#include "cpzeros/deviations.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "cpzeros/rng.hpp"

namespace cpzeros {

namespace {

constexpr std::int64_t kChunk = 4096;  // fixed: chunk boundaries must not depend on threads

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// Chunked deterministic trial loop: per_trial(trial, slot) fills slot-indexed
// buffers, flush(base, count) consumes them serially in chunk order.
template <class PerTrial, class Flush>
void run_trials_chunked(std::int64_t trials, int threads, PerTrial&& per_trial, Flush&& flush) {
    for (std::int64_t base = 0; base < trials; base += kChunk) {
        const std::int64_t n = std::min(kChunk, trials - base);
        parallel_for(n, threads, [&](std::int64_t i) { per_trial(base + i, i); });
        flush(base, n);
    }
}

double expected_density(const DomainSpec& d) { return d.fs_area() / kPi; }

}  // namespace

void ExperimentSpec::validate() const {
    if (trials < kMinTrials) throw ValidationError("experiment '" + name + "': trials below minimum 100");
    if (degrees.empty()) throw ValidationError("experiment '" + name + "': empty degree list");
    for (int n : degrees)
        if (n < 1) throw ValidationError("experiment '" + name + "': degrees must be >= 1");
    if (m < 1 || m > 2) throw ValidationError("experiment '" + name + "': m in {1,2}");
    if (m == 2 && type != "zero-count")
        throw ValidationError("experiment '" + name + "': m=2 only for sandwich zero counts");
    if (delta <= 0.0) throw ValidationError("experiment '" + name + "': delta must be positive");
}

ZeroCountResult run_zero_count_experiment(const ExperimentSpec& cfg, const RecordSink& sink) {
    cfg.validate();
    ZeroCountResult out;
    out.expected_density = cfg.m == 1 ? expected_density(cfg.domain) : 0.0;

    for (int N : cfg.degrees) {
        ZeroCountResult::PerDegree deg;
        deg.histogram.assign(static_cast<std::size_t>(N) + 1, 0);
        BernoulliCounter tail;
        std::int64_t count_sum = 0, ok_trials = 0;

        if (cfg.m == 1) {
            const SectionSampler sampler({1, N, cfg.master_seed});
            std::vector<int> counts(kChunk);
            std::vector<std::uint8_t> failed(kChunk);
            std::vector<double> wall(kChunk);
            run_trials_chunked(
                cfg.trials, cfg.threads,
                [&](std::int64_t trial, std::int64_t slot) {
                    static thread_local AberthSolver solver;
                    static thread_local std::vector<Complex> buf;
                    const double t0 = now_ms();
                    sampler.sample_weighted(static_cast<std::uint64_t>(trial), buf);
                    failed[slot] = 0;
                    try {
                        const RootSet rs = solver.solve(buf);
                        counts[slot] = count_in_domain(rs, cfg.domain);
                    } catch (const NumericError&) {
                        failed[slot] = 1;
                        counts[slot] = -1;
                    }
                    wall[slot] = now_ms() - t0;
                },
                [&](std::int64_t base, std::int64_t n) {
                    for (std::int64_t i = 0; i < n; ++i) {
                        if (failed[i]) {
                            ++deg.flagged;
                            continue;
                        }
                        ++ok_trials;
                        const int c = counts[i];
                        ++deg.histogram[c];
                        count_sum += c;
                        const bool hit =
                            std::abs(static_cast<double>(c) / N - out.expected_density) > cfg.delta;
                        tail.add(hit);
                        if (sink)
                            sink(TrialRecord{base + i, N, static_cast<double>(c), 0.0, hit, false,
                                             wall[i]});
                    }
                });
        } else {
            // m=2: sandwich-based Euclidean area statistic on ball domains
            const DomainSpec ball = cfg.domain.as_euclidean_disk();
            const double r2 = ball.r_outer * ball.r_outer;
            const double expected_area = kPi * r2 * r2 / (1.0 + r2);
            const EnsembleSpec spec{2, N, cfg.master_seed};
            std::vector<double> stat(kChunk);
            std::vector<double> wall(kChunk);
            run_trials_chunked(
                cfg.trials, cfg.threads,
                [&](std::int64_t trial, std::int64_t slot) {
                    const double t0 = now_ms();
                    const PolySection s = sample_section(spec, static_cast<std::uint64_t>(trial));
                    const Sandwich sw = volume_sandwich(s, ball, cfg.width, cfg.grid, 1);
                    stat[slot] = 0.5 * (sw.lower + sw.upper);
                    wall[slot] = now_ms() - t0;
                },
                [&](std::int64_t base, std::int64_t n) {
                    for (std::int64_t i = 0; i < n; ++i) {
                        ++ok_trials;
                        const bool hit = std::abs(stat[i] / N - expected_area) > cfg.delta;
                        tail.add(hit);
                        if (sink) sink(TrialRecord{base + i, N, stat[i], 0.0, hit, false, wall[i]});
                    }
                });
        }
        deg.tail = TailPoint::from_counter(N, tail);
        deg.mean_count_over_n =
            ok_trials > 0 ? static_cast<double>(count_sum) / (static_cast<double>(ok_trials) * N)
                          : 0.0;
        out.per_degree.push_back(std::move(deg));
    }
    return out;
}

HoleResult run_hole_experiment(const ExperimentSpec& cfg, const RecordSink& sink) {
    cfg.validate();
    if (cfg.m != 1) throw ValidationError("hole experiment: m=1 only");
    HoleResult out;
    for (int N : cfg.degrees) {
        const SectionSampler sampler({1, N, cfg.master_seed});
        BernoulliCounter holes;
        std::vector<std::uint8_t> hole_flag(kChunk);
        std::vector<int> counts(kChunk);
        std::vector<double> wall(kChunk);
        run_trials_chunked(
            cfg.trials, cfg.threads,
            [&](std::int64_t trial, std::int64_t slot) {
                static thread_local AberthSolver solver;
                static thread_local std::vector<Complex> buf;
                const double t0 = now_ms();
                sampler.sample_weighted(static_cast<std::uint64_t>(trial), buf);
                const RootSet rs = solver.solve(buf);
                counts[slot] = count_in_domain(rs, cfg.domain);
                hole_flag[slot] = counts[slot] == 0 ? 1 : 0;
                wall[slot] = now_ms() - t0;
            },
            [&](std::int64_t base, std::int64_t n) {
                for (std::int64_t i = 0; i < n; ++i) {
                    holes.add(hole_flag[i] != 0);
                    if (sink)
                        sink(TrialRecord{base + i, N, static_cast<double>(counts[i]), 0.0,
                                         hole_flag[i] != 0, false, wall[i]});
                }
            });
        out.per_degree.push_back(TailPoint::from_counter(N, holes));
        out.lower_bound_log.push_back(hole_lower_bound(cfg.domain, N).log_bound);
    }
    int usable = 0;
    for (const TailPoint& p : out.per_degree)
        if (!p.censored) ++usable;
    if (usable >= 3) out.fit = fit_rate(out.per_degree, cfg.m + 1);
    return out;
}

MaxModulusResult run_max_modulus_experiment(const ExperimentSpec& cfg, const RecordSink& sink) {
    cfg.validate();
    if (cfg.m != 1) throw ValidationError("max-modulus experiment: m=1 only");
    MaxModulusResult out;
    for (int N : cfg.degrees) {
        const EnsembleSpec spec{1, N, cfg.master_seed};
        const double log_gamma = std::log(basis_normalization(1, N));
        BernoulliCounter tail;
        std::int64_t violations = 0;
        std::vector<double> log_m(cfg.trials);
        std::vector<double> chunk_log(kChunk);
        std::vector<std::uint8_t> viol(kChunk);
        std::vector<double> wall(kChunk);
        run_trials_chunked(
            cfg.trials, cfg.threads,
            [&](std::int64_t trial, std::int64_t slot) {
                const double t0 = now_ms();
                const PolySection s = sample_section(spec, static_cast<std::uint64_t>(trial));
                const double m_f = max_modulus(s, cfg.domain, cfg.levels);
                double csq = 0.0;
                for (const Complex& c : s.coeffs) csq += std::norm(c);
                // Cauchy-Schwarz: max |s|_h <= ||c|| in the f-convention
                viol[slot] = m_f > std::sqrt(csq) * (1.0 + 1e-12) ? 1 : 0;
                chunk_log[slot] = std::log(m_f) + log_gamma;
                wall[slot] = now_ms() - t0;
            },
            [&](std::int64_t base, std::int64_t n) {
                for (std::int64_t i = 0; i < n; ++i) {
                    log_m[base + i] = chunk_log[i];
                    violations += viol[i];
                    const bool hit = std::abs(chunk_log[i]) / N > cfg.delta;
                    tail.add(hit);
                    if (sink)
                        sink(TrialRecord{base + i, N, chunk_log[i], 0.0, hit, viol[i] != 0,
                                         wall[i]});
                }
            });
        MaxModulusResult::PerDegree deg;
        deg.tail = TailPoint::from_counter(N, tail);
        deg.bound_violations = violations;
        std::vector<double> over_n(log_m.size());
        for (std::size_t i = 0; i < log_m.size(); ++i) over_n[i] = log_m[i] / N;
        deg.mean_log_m_over_n = pairwise_sum(over_n) / static_cast<double>(over_n.size());
        std::nth_element(over_n.begin(), over_n.begin() + over_n.size() / 2, over_n.end());
        deg.median_log_m_over_n = over_n[over_n.size() / 2];
        out.per_degree.push_back(std::move(deg));
    }
    return out;
}

L1LogResult run_l1_log_experiment(const ExperimentSpec& cfg, const RecordSink& sink) {
    cfg.validate();
    if (cfg.m != 1) throw ValidationError("l1-log experiment: m=1 only");
    L1LogResult out;
    for (int N : cfg.degrees) {
        const EnsembleSpec spec{1, N, cfg.master_seed};
        const double log_gamma = std::log(basis_normalization(1, N));
        BernoulliCounter tail;
        L1LogResult::PerDegree deg;
        std::vector<double> signed_vals, abs_vals;
        std::vector<double> chunk_signed(kChunk), chunk_abs(kChunk), wall(kChunk);
        std::vector<std::uint8_t> failed(kChunk);
        run_trials_chunked(
            cfg.trials, cfg.threads,
            [&](std::int64_t trial, std::int64_t slot) {
                static thread_local AberthSolver solver;
                static thread_local std::vector<Complex> buf;
                const double t0 = now_ms();
                const PolySection s = sample_section(spec, static_cast<std::uint64_t>(trial));
                failed[slot] = 0;
                try {
                    weighted_coeffs_into(s, buf);
                    const RootSet rs = solver.solve(buf);
                    const LogIntegral li =
                        integrate_log_modulus(s, cfg.grid, rs.roots, log_gamma, 1);
                    chunk_signed[slot] = li.signed_part;
                    chunk_abs[slot] = li.absolute;
                } catch (const NumericError&) {
                    failed[slot] = 1;
                }
                wall[slot] = now_ms() - t0;
            },
            [&](std::int64_t base, std::int64_t n) {
                for (std::int64_t i = 0; i < n; ++i) {
                    if (failed[i]) {
                        ++deg.flagged;
                        continue;
                    }
                    signed_vals.push_back(chunk_signed[i]);
                    abs_vals.push_back(chunk_abs[i]);
                    const bool hit = chunk_abs[i] >= cfg.delta * N;
                    tail.add(hit);
                    if (sink)
                        sink(TrialRecord{base + i, N, chunk_abs[i], chunk_signed[i], hit, false,
                                         wall[i]});
                }
            });
        deg.tail = TailPoint::from_counter(N, tail);
        if (!signed_vals.empty()) {
            deg.mean_signed = pairwise_sum(signed_vals) / static_cast<double>(signed_vals.size());
            deg.mean_absolute = pairwise_sum(abs_vals) / static_cast<double>(abs_vals.size());
        }
        deg.predicted_mean = 0.5 * kPi * (std::log(szego_diagonal(1, N)) - kEulerGamma);
        out.per_degree.push_back(std::move(deg));
    }
    return out;
}

KernelSuiteResult run_kernel_suite(const ExperimentSpec& cfg) {
    cfg.validate();
    KernelSuiteResult out;
    const ChartPoint origin = ChartPoint::c1(Complex{0.0, 0.0});
    for (int N : cfg.degrees) {
        KernelSuiteResult::Decay d;
        d.N = N;
        const double split = std::sqrt(2.0 * cfg.m + 3.0) * std::sqrt(std::log(N) / N);
        const int grid_points = 64;
        for (int j = 1; j <= grid_points; ++j) {
            const double dist = split * j / grid_points;
            const ChartPoint w = ChartPoint::c1(Complex{std::tan(dist), 0.0});
            const double p = p_kernel(origin, w, N);
            d.near_sup = std::max(d.near_sup, std::abs(p * std::exp(0.5 * N * dist * dist) - 1.0));
        }
        for (int j = 0; j <= 256; ++j) {
            const double dist = split + (0.5 * kPi - 1e-6 - split) * j / 256.0;
            const ChartPoint w = ChartPoint::c1(Complex{std::tan(dist), 0.0});
            const double p = p_kernel(origin, w, N);
            d.far_max_scaled =
                std::max(d.far_max_scaled, p * std::pow(static_cast<double>(N), cfg.m + 1));
        }
        out.decay.push_back(d);
    }

    // lattice + whitening Monte Carlo at the configured lattice degree
    const int Nl = cfg.lattice_degree;
    const Lattice lat = build_lattice(origin, cfg.lattice_t, cfg.lattice_a, Nl, 1);
    const CovMatrix cov = build_covariance(lat, cfg.threads);
    out.lattice_points = cov.n;
    out.row_sum = row_sum_max(cov);
    const HermitianEigen eig = hermitian_eigen_jacobi(cov.a, cov.n);
    out.min_eig = eig.values.front();
    std::vector<double> inv_sqrt(cov.n);
    for (int k = 0; k < cov.n; ++k) inv_sqrt[k] = 1.0 / std::sqrt(eig.values[k]);

    const int n = cov.n;
    if (static_cast<double>(cfg.trials) * n > 5e7)
        throw ValidationError("kernel-suite: whitening sample storage too large");
    const SectionSampler sampler({1, Nl, cfg.master_seed});
    const double bound_factor = std::sqrt(2.0 * n);
    std::vector<Complex> zetas(static_cast<std::size_t>(cfg.trials) * n);
    std::vector<std::uint8_t> viol(kChunk);
    std::int64_t violations = 0;
    std::vector<Complex> chunk_z(static_cast<std::size_t>(kChunk) * n);
    run_trials_chunked(
        cfg.trials, cfg.threads,
        [&](std::int64_t trial, std::int64_t slot) {
            static thread_local std::vector<Complex> buf;
            sampler.sample_weighted(static_cast<std::uint64_t>(trial), buf);
            const std::vector<Complex> xi = coherent_values(buf, lat);
            const std::vector<Complex> zeta = apply_spectral_function(eig, inv_sqrt, xi);
            double xi_max = 0.0, zeta_max = 0.0;
            for (int i = 0; i < n; ++i) {
                xi_max = std::max(xi_max, std::abs(xi[i]));
                zeta_max = std::max(zeta_max, std::abs(zeta[i]));
            }
            viol[slot] = zeta_max > bound_factor * xi_max * (1.0 + 1e-12) ? 1 : 0;
            std::copy(zeta.begin(), zeta.end(), chunk_z.begin() + slot * n);
        },
        [&](std::int64_t base, std::int64_t cnt) {
            for (std::int64_t i = 0; i < cnt; ++i) violations += viol[i];
            std::copy(chunk_z.begin(), chunk_z.begin() + cnt * n,
                      zetas.begin() + base * n);
        });
    out.linf_violations = violations;
    out.whiten_trials = cfg.trials;

    double max_err = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            Complex acc{0.0, 0.0};
            for (std::int64_t t = 0; t < cfg.trials; ++t)
                acc += zetas[static_cast<std::size_t>(t) * n + a] *
                       std::conj(zetas[static_cast<std::size_t>(t) * n + b]);
            acc /= static_cast<double>(cfg.trials);
            const double target = a == b ? 1.0 : 0.0;
            max_err = std::max(max_err, std::abs(acc - target));
        }
    out.cov_max_err = max_err;
    out.cov_tol = 3.0 / std::sqrt(static_cast<double>(cfg.trials));
    return out;
}

PlCheckResult run_pl_check(const ExperimentSpec& cfg) {
    cfg.validate();
    if (cfg.m != 1) throw ValidationError("pl-check: m=1 only");
    PlCheckResult out;
    const TestFunction one = TestFunction::constant_one();
    for (int N : cfg.degrees) {
        const EnsembleSpec spec{1, N, cfg.master_seed};
        const TestFunction psi = smooth_indicator(cfg.domain, cfg.width, TestFunction::Side::inner);
        PlCheckResult::PerDegree deg;
        deg.N = N;
        std::vector<double> errs(cfg.trials);
        parallel_for(cfg.trials, cfg.threads, [&](std::int64_t trial) {
            static thread_local AberthSolver solver;
            static thread_local std::vector<Complex> buf;
            const PolySection s = sample_section(spec, static_cast<std::uint64_t>(trial));
            weighted_coeffs_into(s, buf);
            const RootSet rs = solver.solve(buf);
            const double pl = pl_linear_statistic(s, psi, cfg.grid, rs.roots, 1);
            double direct = psi.value_at_infinity() * rs.degree_at_infinity;
            for (const Complex& z : rs.roots) direct += psi.value(z);
            errs[trial] = std::abs(pl - direct);
        });
        deg.max_rel_err = *std::max_element(errs.begin(), errs.end()) / N;
        const PolySection s0 = sample_section(spec, 0);
        deg.constant_psi_err = std::abs(pl_linear_statistic(s0, one, cfg.grid, {}, cfg.threads) - N);
        out.per_degree.push_back(deg);
    }
    return out;
}

HoleLowerBound hole_lower_bound(const DomainSpec& d, int N, std::int64_t witness_trials,
                                std::uint64_t master_seed) {
    if (N < 1) throw ValidationError("hole_lower_bound: N >= 1");
    if (d.contains_infinity())
        throw ValidationError(
            "hole_lower_bound: domain contains the zero of sigma (rotate sigma/domain first)");
    const DomainSpec disk = d.as_euclidean_disk();
    const double r_far = std::abs(disk.center) + disk.r_outer;

    HoleLowerBound out;
    out.a = 0.5 * std::log1p(r_far * r_far);
    out.b = 1.0 / std::sqrt(kPi);
    const double d_n = static_cast<double>(N) + 1.0;  // d_N for m=1
    out.t_n = out.b * std::exp(-out.a * N) / (std::sqrt(static_cast<double>(N)) * std::sqrt(d_n));
    out.log_bound = -1.0 + (d_n - 1.0) * std::log(out.t_n * out.t_n / 2.0);
    out.bound = std::exp(out.log_bound);

    if (witness_trials > 0) {
        // sigma-adapted basis: sigma^N is the constant monomial, so the
        // adapted orthonormal basis is the monomial basis with it first.
        const std::uint64_t seed = rng::salted_seed(master_seed, 0x5e4c24ull);
        const double q = 1.0 - std::exp(-out.t_n * out.t_n);
        std::vector<Complex> coeffs(static_cast<std::size_t>(N) + 1);
        AberthSolver solver;
        for (std::int64_t trial = 0; trial < witness_trials; ++trial) {
            for (int j = 0; j <= N; ++j) {
                const rng::UniformPair u =
                    rng::uniform_pair(seed, static_cast<std::uint64_t>(trial), j);
                double mod2;
                if (j == 0) {
                    mod2 = 1.0 - std::log(u.open);  // |c|^2 ~ 1 + Exp(1), i.e. |c| >= 1
                } else {
                    mod2 = -std::log1p(-(1.0 - u.open) * q);  // conditioned |c| < t_N
                }
                const double w = std::exp(0.5 * log_binomial(N, j));
                coeffs[j] = w * std::polar(std::sqrt(mod2), 2.0 * kPi * u.half_open);
            }
            const RootSet rs = solver.solve(coeffs);
            if (count_in_domain(rs, disk) == 0) ++out.witness_holes;
        }
        out.witness_trials = witness_trials;
    }
    return out;
}

}  // namespace cpzeros
