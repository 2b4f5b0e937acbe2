#pragma once

// Config-driven orchestration: parse and validate a JSON experiment config,
// run the named experiments, persist plain-text outputs (summary/stat CSVs,
// JSONL trial records, rate-fit JSON) and a manifest, and derive reports and
// plot-ready data files from a manifest.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cpzeros/deviations.hpp"

namespace cpzeros {

inline constexpr const char* kVersion = "cpzeros 0.1.0";

struct RunOverrides {
    std::optional<std::uint64_t> master_seed;
    std::optional<int> threads;
    std::optional<std::string> output_dir;
};

struct RunManifest {
    std::string version;
    std::string config_hash;
    std::uint64_t master_seed = 0;
    int threads = 0;
    std::string started;
    std::string finished;
    std::filesystem::path output_dir;

    struct Entry {
        std::string name;
        std::string type;
        std::vector<int> degrees;
        std::vector<std::string> outputs;  // paths relative to output_dir
    };
    std::vector<Entry> experiments;
};

// Parse + validate a config file.  ValidationError on schema violations
// (message names the offending field).
std::vector<ExperimentSpec> parse_config(const std::filesystem::path& config_path,
                                         const RunOverrides& ov, std::uint64_t& seed_out,
                                         int& threads_out, std::filesystem::path& outdir_out);

// Execute a config and write all outputs plus <output_dir>/manifest.json.
RunManifest run_config(const std::filesystem::path& config_path, const RunOverrides& ov = {});

RunManifest load_manifest(const std::filesystem::path& manifest_path);

// Human-readable tables + combined report.csv next to the manifest.
void emit_report(const std::filesystem::path& manifest_path, std::ostream& os);

// kind: histogram | rate | kernel-decay | scatter-zeros
void emit_plot_data(const std::filesystem::path& manifest_path, const std::string& kind,
                    std::ostream& log);

// FNV-1a 64 over the canonical (key-sorted) JSON dump.
std::string config_hash_hex(const std::string& canonical_json);

}  // namespace cpzeros
