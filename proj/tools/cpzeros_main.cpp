// cpzeros: random holomorphic section zero statistics on CP^m.
//
//   cpzeros run <config.json> [--seed S] [--threads T] [--output-dir DIR]
//   cpzeros report <manifest.json>
//   cpzeros plot <manifest.json> --kind histogram|rate|kernel-decay|scatter-zeros
//
// CPZEROS_THREADS sets the worker count when --threads is absent (0 = the
// OpenMP default).  Results are bit-identical for any thread count.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "cpzeros/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"random section zero statistics on CP^m"};
    app.require_subcommand(1);

    std::string config_path, manifest_path, plot_manifest, kind;
    std::uint64_t seed = 0;
    int threads = -1;
    std::string output_dir;

    CLI::App* run = app.add_subcommand("run", "run the experiments in a config file");
    run->add_option("config", config_path, "JSON experiment config")->required();
    CLI::Option* seed_opt = run->add_option("--seed", seed, "override master_seed");
    run->add_option("--threads", threads, "worker threads (0 = OpenMP default)");
    run->add_option("--output-dir", output_dir, "override output directory");

    CLI::App* report = app.add_subcommand("report", "summarize a finished run");
    report->add_option("manifest", manifest_path, "manifest.json of a run")->required();

    CLI::App* plot = app.add_subcommand("plot", "emit plot-ready data files");
    plot->add_option("manifest", plot_manifest, "manifest.json of a run")->required();
    plot->add_option("--kind", kind, "histogram|rate|kernel-decay|scatter-zeros")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            cpzeros::RunOverrides ov;
            if (seed_opt->count() > 0) ov.master_seed = seed;
            if (threads >= 0) {
                ov.threads = threads;
            } else if (const char* env = std::getenv("CPZEROS_THREADS")) {
                ov.threads = std::atoi(env);
            }
            if (!output_dir.empty()) ov.output_dir = output_dir;
            const cpzeros::RunManifest m = cpzeros::run_config(config_path, ov);
            std::cout << "wrote " << (m.output_dir / "manifest.json").string() << " ("
                      << m.experiments.size() << " experiments)\n";
        } else if (report->parsed()) {
            cpzeros::emit_report(manifest_path, std::cout);
        } else if (plot->parsed()) {
            cpzeros::emit_plot_data(plot_manifest, kind, std::cout);
        }
    } catch (const cpzeros::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const cpzeros::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
