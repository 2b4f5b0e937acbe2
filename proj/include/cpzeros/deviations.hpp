#pragma once

// Experiment drivers: empirical tail probabilities for zero counts, hole
// probabilities with N^{m+1} rate fits, max-modulus tails, L1-log tails, the
// kernel/lattice suite, the Poincare-Lelong cross-check, and the analytic
// hole lower bound.
//
// Every driver is embarrassingly parallel over trials with per-trial keyed
// RNG; aggregation uses integer counters and fixed-order pairwise sums, so
// outputs are bit-identical for any thread count.

#include <functional>
#include <optional>
#include <string>

#include "cpzeros/currents.hpp"
#include "cpzeros/domain.hpp"
#include "cpzeros/kernel.hpp"
#include "cpzeros/stats.hpp"
#include "cpzeros/zeros.hpp"

namespace cpzeros {

inline constexpr std::int64_t kMinTrials = 100;

struct ExperimentSpec {
    std::string name = "experiment";
    std::string type;  // hole | zero-count | max-modulus | l1-log | kernel-suite | pl-check
    int m = 1;
    std::vector<int> degrees;
    std::uint64_t master_seed = 1;
    std::int64_t trials = 1000;
    double delta = 0.1;
    DomainSpec domain = DomainSpec::disk(Complex{0.0, 0.0}, 0.5);
    int levels = 4;        // max-modulus refinement depth
    double width = 0.1;    // pl-check smoothing width
    double lattice_t = 0.5;
    double lattice_a = 3.0;
    int lattice_degree = 100;
    QuadratureGrid grid;
    int threads = 0;
    bool record_trials = false;

    void validate() const;
};

// One line of the JSONL record streams.  Only the statistic fields are
// deterministic; wall_ms is wall time.
struct TrialRecord {
    std::int64_t trial = 0;
    int N = 0;
    double stat = 0.0;   // experiment statistic (count, log max, L1 integral)
    double extra = 0.0;  // second statistic where one exists
    bool hit = false;    // tail/hole event flag
    bool flagged = false;
    double wall_ms = 0.0;
};

using RecordSink = std::function<void(const TrialRecord&)>;

struct ZeroCountResult {
    struct PerDegree {
        TailPoint tail;                       // P(|count/N - area/pi| > delta)
        double mean_count_over_n = 0.0;       // exact integer-sum mean
        std::vector<std::int64_t> histogram;  // index = count, 0..N
        std::int64_t flagged = 0;             // solver failures (excluded)
    };
    std::vector<PerDegree> per_degree;
    double expected_density = 0.0;  // Area_FS(U)/pi
};

ZeroCountResult run_zero_count_experiment(const ExperimentSpec& cfg,
                                          const RecordSink& sink = nullptr);

struct HoleResult {
    std::vector<TailPoint> per_degree;       // p_hat = hole frequency
    std::vector<double> lower_bound_log;     // log of the analytic lower bound
    std::optional<RateFit> fit;              // present with >= 3 uncensored points
};

HoleResult run_hole_experiment(const ExperimentSpec& cfg, const RecordSink& sink = nullptr);

struct MaxModulusResult {
    struct PerDegree {
        TailPoint tail;  // P(|log M|/N > delta), M the L2-normalized modulus
        std::int64_t bound_violations = 0;  // M > ||c|| sqrt(Pi_N)
        double mean_log_m_over_n = 0.0;
        double median_log_m_over_n = 0.0;
    };
    std::vector<PerDegree> per_degree;
};

MaxModulusResult run_max_modulus_experiment(const ExperimentSpec& cfg,
                                            const RecordSink& sink = nullptr);

struct L1LogResult {
    struct PerDegree {
        TailPoint tail;  // P(int |log|s|| >= delta N)
        double mean_signed = 0.0;
        double mean_absolute = 0.0;
        double predicted_mean = 0.0;  // (pi/2)(log Pi_N - gamma_Euler)
        std::int64_t flagged = 0;     // quadrature failures (excluded)
    };
    std::vector<PerDegree> per_degree;
};

L1LogResult run_l1_log_experiment(const ExperimentSpec& cfg, const RecordSink& sink = nullptr);

struct KernelSuiteResult {
    struct Decay {
        int N = 0;
        double near_sup = 0.0;        // sup |P_N e^{+N d^2/2} - 1|, d <= b sqrt(log N / N)
        double far_max_scaled = 0.0;  // max P_N N^{m+1} beyond the split
    };
    std::vector<Decay> decay;
    int lattice_points = 0;
    double row_sum = 0.0;
    double min_eig = 0.0;
    double cov_max_err = 0.0;  // whitened empirical covariance vs identity
    double cov_tol = 0.0;      // 3 sigma Monte Carlo tolerance
    std::int64_t linf_violations = 0;
    std::int64_t whiten_trials = 0;
};

KernelSuiteResult run_kernel_suite(const ExperimentSpec& cfg);

struct PlCheckResult {
    struct PerDegree {
        int N = 0;
        double max_rel_err = 0.0;      // max |pl - sum psi(root)| / N over sections
        double constant_psi_err = 0.0; // |pl(1) - N|
    };
    std::vector<PerDegree> per_degree;
};

PlCheckResult run_pl_check(const ExperimentSpec& cfg);

struct HoleLowerBound {
    double a = 0.0;          // (1/2) log(1 + r_far^2)
    double b = 0.0;          // Vol(M)^{-1/2} = pi^{-1/2}
    double t_n = 0.0;
    double log_bound = 0.0;  // log( e^{-1} (t_N^2/2)^{d_N - 1} )
    double bound = 0.0;      // exp(log_bound), may underflow to 0
    std::int64_t witness_trials = 0;
    std::int64_t witness_holes = 0;
};

// Section 4.2.4 construction with sigma the constant section of O(1):
// a = (1/2) log(1+r_far^2), b = pi^{-1/2}, t_N = b e^{-aN}/(sqrt(N) sqrt(d_N)).
// witness_trials > 0 additionally samples sections conditioned on
// {|c_1| > 1, |c_j| < t_N} in the sigma-adapted basis and counts holes
// (the inclusion predicts every one is a hole).
HoleLowerBound hole_lower_bound(const DomainSpec& d, int N, std::int64_t witness_trials = 0,
                                std::uint64_t master_seed = 0);

}  // namespace cpzeros
