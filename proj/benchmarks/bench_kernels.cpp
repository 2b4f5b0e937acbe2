// Serial vs OpenMP timings for the three data-parallel kernels: covariance
// matrix assembly, Monte Carlo trial loops (sampling + root finding), and
// CP^1 quadrature.  Usage: bench_kernels [threads]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "cpzeros/currents.hpp"
#include "cpzeros/kernel.hpp"
#include "cpzeros/zeros.hpp"

using namespace cpzeros;

namespace {

double seconds(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-24s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    const int threads = argc > 1 ? std::atoi(argv[1]) : 0;

    // covariance assembly, ~1600 points
    const Lattice lat = build_lattice(ChartPoint::c1({0.0, 0.0}), 0.5, 0.5, 1600, 1);
    std::cout << "lattice points: " << lat.points.size() << "\n";
    CovMatrix cov_s, cov_p;
    const double t_cov_s = seconds([&] { cov_s = build_covariance_serial(lat); });
    const double t_cov_p = seconds([&] { cov_p = build_covariance(lat, threads); });
    if (cov_s.a != cov_p.a) {
        std::cerr << "FAIL: covariance serial/parallel mismatch\n";
        return 1;
    }
    report("build_covariance", t_cov_s, t_cov_p);

    // trial loop: sample + root find, N = 30
    const SectionSampler sampler({1, 30, 7});
    const std::int64_t trials = 20000;
    auto trial_loop = [&](bool parallel) {
        std::vector<int> counts(trials);
        auto body = [&](std::int64_t t) {
            static thread_local AberthSolver solver;
            static thread_local std::vector<Complex> buf;
            sampler.sample_weighted(static_cast<std::uint64_t>(t), buf);
            counts[t] = static_cast<int>(solver.solve(buf).roots.size());
        };
        if (parallel)
            parallel_for(trials, threads, body);
        else
            serial_for(trials, body);
        return counts;
    };
    std::vector<int> c_s, c_p;
    const double t_mc_s = seconds([&] { c_s = trial_loop(false); });
    const double t_mc_p = seconds([&] { c_p = trial_loop(true); });
    if (c_s != c_p) {
        std::cerr << "FAIL: trial loop serial/parallel mismatch\n";
        return 1;
    }
    report("mc_root_trials", t_mc_s, t_mc_p);

    // quadrature: log-modulus integral of one N = 80 section
    const PolySection s = sample_section({1, 80, 7}, 0);
    const RootSet rs = find_roots(s);
    const QuadratureGrid grid = QuadratureGrid::fine();
    double q_s = 0.0, q_p = 0.0;
    const SectionEvaluator ev(s);
    const auto integrand = [&](int chart, Complex z) { return ev.log_hnorm(chart, z); };
    const double t_q_s = seconds([&] {
        for (int rep = 0; rep < 10; ++rep) q_s = integrate_cp1_serial(integrand, grid, rs.roots);
    });
    const double t_q_p = seconds([&] {
        for (int rep = 0; rep < 10; ++rep) q_p = integrate_cp1(integrand, grid, rs.roots, threads);
    });
    if (q_s != q_p) {
        std::cerr << "FAIL: quadrature serial/parallel mismatch\n";
        return 1;
    }
    report("cp1_quadrature", t_q_s, t_q_p);
    return 0;
}
