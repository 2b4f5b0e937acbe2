#include "cpzeros/runner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace cpzeros {

namespace {

using nlohmann::json;

std::string iso_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

DomainSpec parse_domain(const json& j, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where + ": domain must be an object");
    const std::string kind = j.value("kind", "disk");
    Complex center{0.0, 0.0};
    if (j.contains("center")) {
        const auto& c = j.at("center");
        if (!c.is_array() || c.size() != 2)
            throw ValidationError(where + ".center: expected [re, im]");
        center = Complex{c[0].get<double>(), c[1].get<double>()};
    }
    try {
        if (kind == "disk") return DomainSpec::disk(center, j.at("radius").get<double>());
        if (kind == "cap") return DomainSpec::cap(center, j.at("radius").get<double>());
        if (kind == "annulus")
            return DomainSpec::annulus_at(center, j.at("r_inner").get<double>(),
                                          j.at("r_outer").get<double>());
        if (kind == "complement")
            return DomainSpec::complement_of_disk(center, j.at("radius").get<double>());
        if (kind == "whole") return DomainSpec::whole();
    } catch (const json::exception& e) {
        throw ValidationError(where + ".domain: " + e.what());
    }
    throw ValidationError(where + ".kind: unknown domain kind '" + kind + "'");
}

std::vector<int> parse_degrees(const json& j, const std::string& where) {
    std::vector<int> out;
    if (j.is_number_integer()) {
        out.push_back(j.get<int>());
    } else if (j.is_array()) {
        for (const auto& v : j) out.push_back(v.get<int>());
    } else {
        throw ValidationError(where + ".N: expected integer or list of integers");
    }
    return out;
}

ExperimentSpec parse_experiment(const json& j, int index, std::uint64_t seed, int threads) {
    const std::string where = "experiments[" + std::to_string(index) + "]";
    if (!j.is_object()) throw ValidationError(where + ": expected an object");
    ExperimentSpec e;
    if (!j.contains("type")) throw ValidationError(where + ".type: required");
    e.type = j.at("type").get<std::string>();
    static const char* known[] = {"hole",   "zero-count",   "max-modulus",
                                  "l1-log", "kernel-suite", "pl-check"};
    bool ok = false;
    for (const char* k : known) ok = ok || e.type == k;
    if (!ok) throw ValidationError(where + ".type: unknown experiment type '" + e.type + "'");
    e.name = j.value("name", e.type + "-" + std::to_string(index));
    e.m = j.value("m", 1);
    if (!j.contains("N")) throw ValidationError(where + ".N: required");
    e.degrees = parse_degrees(j.at("N"), where);
    e.master_seed = seed;
    e.trials = j.value("trials", std::int64_t{1000});
    e.delta = j.value("delta", 0.1);
    if (j.contains("domain")) e.domain = parse_domain(j.at("domain"), where);
    e.levels = j.value("levels", 4);
    e.width = j.value("width", 0.1);
    if (j.contains("lattice")) {
        const auto& l = j.at("lattice");
        e.lattice_t = l.value("t", 0.5);
        e.lattice_a = l.value("a", 3.0);
        e.lattice_degree = l.value("N", 100);
    }
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        e.grid.radial_cells = g.value("radial_cells", e.grid.radial_cells);
        e.grid.angular_cells = g.value("angular_cells", e.grid.angular_cells);
        e.grid.points_per_cell = g.value("points_per_cell", e.grid.points_per_cell);
        e.grid.refine_depth = g.value("refine_depth", e.grid.refine_depth);
    }
    e.threads = threads;
    e.record_trials = j.value("record_trials", false);
    e.validate();
    return e;
}

std::string csv_bool(bool b) { return b ? "1" : "0"; }

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream os(p);
    if (!os) throw ValidationError("cannot write " + p.string());
    os << text;
}

std::string summary_csv(const std::vector<TailPoint>& pts) {
    std::ostringstream os;
    os.precision(17);
    os << "N,p_hat,ci_lo,ci_hi,trials,censored\n";
    for (const TailPoint& p : pts)
        os << p.N << "," << p.p_hat << "," << p.ci_lo << "," << p.ci_hi << "," << p.trials << ","
           << csv_bool(p.censored) << "\n";
    return os.str();
}

json ratefit_json(const RateFit& f) {
    json j;
    j["exponent"] = f.exponent;
    j["slope"] = f.slope;
    j["intercept"] = f.intercept;
    j["r2"] = f.r2;
    j["alt_exponent"] = 1;
    j["alt_slope"] = f.alt_slope;
    j["alt_intercept"] = f.alt_intercept;
    j["alt_r2"] = f.alt_r2;
    j["r2_gap"] = f.r2_gap();
    j["points_used"] = f.points_used;
    return j;
}

class RecordWriter {
public:
    RecordWriter(const std::filesystem::path& p, bool enabled) : enabled_(enabled) {
        if (enabled_) {
            os_.open(p);
            if (!os_) throw ValidationError("cannot write " + p.string());
            os_.precision(17);
        }
    }
    RecordSink sink() {
        if (!enabled_) return nullptr;
        return [this](const TrialRecord& r) {
            os_ << "{\"trial\":" << r.trial << ",\"N\":" << r.N << ",\"stat\":" << r.stat
                << ",\"extra\":" << r.extra << ",\"hit\":" << (r.hit ? "true" : "false")
                << ",\"flagged\":" << (r.flagged ? "true" : "false")
                << ",\"wall_ms\":" << r.wall_ms << "}\n";
        };
    }

private:
    bool enabled_;
    std::ofstream os_;
};

}  // namespace

std::string config_hash_hex(const std::string& canonical_json) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canonical_json) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::vector<ExperimentSpec> parse_config(const std::filesystem::path& config_path,
                                         const RunOverrides& ov, std::uint64_t& seed_out,
                                         int& threads_out, std::filesystem::path& outdir_out) {
    std::ifstream is(config_path);
    if (!is) throw ValidationError("cannot read config " + config_path.string());
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("config: top level must be an object");
    seed_out = ov.master_seed.value_or(j.value("master_seed", std::uint64_t{1}));
    threads_out = ov.threads.value_or(j.value("threads", 0));
    outdir_out = ov.output_dir.value_or(j.value("output_dir", std::string{"out"}));
    if (!j.contains("experiments") || !j.at("experiments").is_array() ||
        j.at("experiments").empty())
        throw ValidationError("config.experiments: non-empty list required");
    std::vector<ExperimentSpec> specs;
    int idx = 0;
    for (const auto& ej : j.at("experiments"))
        specs.push_back(parse_experiment(ej, idx++, seed_out, threads_out));
    return specs;
}

namespace {

void run_one(const ExperimentSpec& e, const std::filesystem::path& dir,
             RunManifest::Entry& entry) {
    auto out = [&](const std::string& suffix) {
        const std::string fname = e.name + "_" + suffix;
        entry.outputs.push_back(fname);
        return dir / fname;
    };
    RecordWriter records(dir / (e.name + "_records.jsonl"), e.record_trials);
    if (e.record_trials) entry.outputs.push_back(e.name + "_records.jsonl");

    std::ostringstream stats;
    stats.precision(17);
    if (e.type == "hole") {
        const HoleResult r = run_hole_experiment(e, records.sink());
        write_file(out("summary.csv"), summary_csv(r.per_degree));
        stats << "N,log_lower_bound\n";
        for (std::size_t i = 0; i < r.per_degree.size(); ++i)
            stats << r.per_degree[i].N << "," << r.lower_bound_log[i] << "\n";
        write_file(out("stats.csv"), stats.str());
        if (r.fit) write_file(out("ratefit.json"), ratefit_json(*r.fit).dump(2) + "\n");
    } else if (e.type == "zero-count") {
        const ZeroCountResult r = run_zero_count_experiment(e, records.sink());
        std::vector<TailPoint> pts;
        for (const auto& d : r.per_degree) pts.push_back(d.tail);
        write_file(out("summary.csv"), summary_csv(pts));
        stats << "N,mean_count_over_n,expected_density,flagged\n";
        for (const auto& d : r.per_degree)
            stats << d.tail.N << "," << d.mean_count_over_n << "," << r.expected_density << ","
                  << d.flagged << "\n";
        write_file(out("stats.csv"), stats.str());
        std::ostringstream hist;
        hist << "N,count,trials\n";
        for (const auto& d : r.per_degree)
            for (std::size_t c = 0; c < d.histogram.size(); ++c)
                if (d.histogram[c] > 0) hist << d.tail.N << "," << c << "," << d.histogram[c] << "\n";
        write_file(out("hist.csv"), hist.str());
    } else if (e.type == "max-modulus") {
        const MaxModulusResult r = run_max_modulus_experiment(e, records.sink());
        std::vector<TailPoint> pts;
        for (const auto& d : r.per_degree) pts.push_back(d.tail);
        write_file(out("summary.csv"), summary_csv(pts));
        stats << "N,mean_log_m_over_n,median_log_m_over_n,bound_violations\n";
        for (const auto& d : r.per_degree)
            stats << d.tail.N << "," << d.mean_log_m_over_n << "," << d.median_log_m_over_n << ","
                  << d.bound_violations << "\n";
        write_file(out("stats.csv"), stats.str());
    } else if (e.type == "l1-log") {
        const L1LogResult r = run_l1_log_experiment(e, records.sink());
        std::vector<TailPoint> pts;
        for (const auto& d : r.per_degree) pts.push_back(d.tail);
        write_file(out("summary.csv"), summary_csv(pts));
        stats << "N,mean_signed,mean_absolute,predicted_mean,flagged\n";
        for (const auto& d : r.per_degree)
            stats << d.tail.N << "," << d.mean_signed << "," << d.mean_absolute << ","
                  << d.predicted_mean << "," << d.flagged << "\n";
        write_file(out("stats.csv"), stats.str());
    } else if (e.type == "kernel-suite") {
        const KernelSuiteResult r = run_kernel_suite(e);
        stats << "N,near_sup,far_max_scaled\n";
        for (const auto& d : r.decay) stats << d.N << "," << d.near_sup << "," << d.far_max_scaled << "\n";
        write_file(out("stats.csv"), stats.str());
        std::ostringstream lat;
        lat.precision(17);
        lat << "lattice_points,row_sum,min_eig,cov_max_err,cov_tol,linf_violations,whiten_trials\n"
            << r.lattice_points << "," << r.row_sum << "," << r.min_eig << "," << r.cov_max_err
            << "," << r.cov_tol << "," << r.linf_violations << "," << r.whiten_trials << "\n";
        write_file(out("lattice.csv"), lat.str());
        if (e.record_trials) {
            const Lattice l = build_lattice(ChartPoint::c1(Complex{0.0, 0.0}), e.lattice_t,
                                            e.lattice_a, e.lattice_degree, 1);
            write_file(out("lattice_points.csv"), lattice_to_csv(l));
            write_file(out("cov.csv"), covariance_to_csv(build_covariance(l, e.threads)));
        }
    } else if (e.type == "pl-check") {
        const PlCheckResult r = run_pl_check(e);
        stats << "N,max_rel_err,constant_psi_err\n";
        for (const auto& d : r.per_degree)
            stats << d.N << "," << d.max_rel_err << "," << d.constant_psi_err << "\n";
        write_file(out("stats.csv"), stats.str());
    }
}

json manifest_json(const RunManifest& m) {
    json j;
    j["version"] = m.version;
    j["config_hash"] = m.config_hash;
    j["master_seed"] = m.master_seed;
    j["threads"] = m.threads;
    j["started"] = m.started;
    j["finished"] = m.finished;
    j["experiments"] = json::array();
    for (const auto& e : m.experiments) {
        json ej;
        ej["name"] = e.name;
        ej["type"] = e.type;
        ej["N"] = e.degrees;
        ej["outputs"] = e.outputs;
        j["experiments"].push_back(ej);
    }
    return j;
}

}  // namespace

RunManifest run_config(const std::filesystem::path& config_path, const RunOverrides& ov) {
    std::uint64_t seed = 1;
    int threads = 0;
    std::filesystem::path outdir;
    const auto specs = parse_config(config_path, ov, seed, threads, outdir);

    std::ifstream is(config_path);
    json config_json;
    is >> config_json;

    RunManifest m;
    m.version = kVersion;
    m.config_hash = config_hash_hex(config_json.dump());
    m.master_seed = seed;
    m.threads = threads;
    m.started = iso_now();
    m.output_dir = outdir;
    std::filesystem::create_directories(outdir);

    for (const ExperimentSpec& e : specs) {
        RunManifest::Entry entry;
        entry.name = e.name;
        entry.type = e.type;
        entry.degrees = e.degrees;
        run_one(e, outdir, entry);
        m.experiments.push_back(std::move(entry));
    }
    m.finished = iso_now();
    write_file(outdir / "manifest.json", manifest_json(m).dump(2) + "\n");
    return m;
}

RunManifest load_manifest(const std::filesystem::path& manifest_path) {
    std::ifstream is(manifest_path);
    if (!is) throw ValidationError("cannot read manifest " + manifest_path.string());
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("manifest parse error: ") + e.what());
    }
    RunManifest m;
    m.version = j.value("version", "");
    m.config_hash = j.value("config_hash", "");
    m.master_seed = j.value("master_seed", std::uint64_t{0});
    m.threads = j.value("threads", 0);
    m.started = j.value("started", "");
    m.finished = j.value("finished", "");
    m.output_dir = manifest_path.parent_path();
    for (const auto& ej : j.value("experiments", json::array())) {
        RunManifest::Entry e;
        e.name = ej.value("name", "");
        e.type = ej.value("type", "");
        for (const auto& n : ej.value("N", json::array())) e.degrees.push_back(n.get<int>());
        for (const auto& o : ej.value("outputs", json::array())) e.outputs.push_back(o.get<std::string>());
        m.experiments.push_back(std::move(e));
    }
    return m;
}

namespace {

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int col(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        return -1;
    }
};

bool read_csv(const std::filesystem::path& p, Csv& out) {
    std::ifstream is(p);
    if (!is) return false;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (first) {
            out.header = cells;
            first = false;
        } else {
            out.rows.push_back(cells);
        }
    }
    return !first;
}

const std::string* find_output(const RunManifest::Entry& e, const std::string& suffix) {
    for (const std::string& o : e.outputs)
        if (o.size() > suffix.size() && o.substr(o.size() - suffix.size()) == suffix) return &o;
    return nullptr;
}

}  // namespace

void emit_report(const std::filesystem::path& manifest_path, std::ostream& os) {
    const RunManifest m = load_manifest(manifest_path);
    os << m.version << "  run " << m.config_hash << "  seed " << m.master_seed << "\n";
    if (m.experiments.empty()) {
        os << "no experiments\n";
        return;
    }
    std::ostringstream combined;
    combined << "experiment,type,N,p_hat,ci_lo,ci_hi,trials,censored\n";
    for (const auto& e : m.experiments) {
        os << "\n== " << e.name << " (" << e.type << ") ==\n";
        const std::string* summary = find_output(e, "_summary.csv");
        if (summary) {
            Csv csv;
            if (!read_csv(m.output_dir / *summary, csv)) {
                os << "  missing output: " << *summary << "\n";
                continue;
            }
            os << "  N         p_hat        CI95                    trials    censored";
            if (e.type == "hole") os << "   -log(p)/N^2";
            os << "\n";
            for (const auto& r : csv.rows) {
                const double p = std::stod(r[1]);
                const int N = std::stoi(r[0]);
                os << "  " << std::setw(6) << std::left << N << std::setw(13) << std::scientific
                   << std::setprecision(4) << p << "[" << std::stod(r[2]) << ", " << std::stod(r[3])
                   << "]  " << std::setw(10) << r[4] << r[5];
                if (e.type == "hole" && p > 0.0)
                    os << "   " << std::fixed << std::setprecision(5) << -std::log(p) / (N * N);
                os << "\n";
                combined << e.name << "," << e.type << "," << r[0] << "," << r[1] << "," << r[2]
                         << "," << r[3] << "," << r[4] << "," << r[5] << "\n";
            }
        }
        const std::string* ratefit = find_output(e, "_ratefit.json");
        if (ratefit) {
            std::ifstream is(m.output_dir / *ratefit);
            if (is) {
                json f;
                is >> f;
                os << "  rate fit: -log p = " << f["slope"].get<double>() << " * N^"
                   << f["exponent"].get<int>() << " + " << f["intercept"].get<double>()
                   << "   R^2 = " << f["r2"].get<double>() << "\n";
                os << "  alt fit (pure exponential): R^2 = " << f["alt_r2"].get<double>()
                   << "   gap = " << f["r2_gap"].get<double>() << "\n";
            }
        }
        const std::string* stats = find_output(e, "_stats.csv");
        if (stats) {
            Csv csv;
            if (read_csv(m.output_dir / *stats, csv)) {
                os << "  stats: ";
                for (const auto& h : csv.header) os << h << " ";
                os << "\n";
                for (const auto& r : csv.rows) {
                    os << "         ";
                    for (const auto& c : r) os << c << " ";
                    os << "\n";
                }
            } else {
                os << "  missing output: " << *stats << "\n";
            }
        }
        const std::string* lattice = find_output(e, "_lattice.csv");
        if (lattice) {
            Csv csv;
            if (read_csv(m.output_dir / *lattice, csv)) {
                os << "  lattice: ";
                for (std::size_t i = 0; i < csv.header.size(); ++i)
                    os << csv.header[i] << "=" << csv.rows[0][i] << " ";
                os << "\n";
            }
        }
    }
    write_file(m.output_dir / "report.csv", combined.str());
    os << "\nwrote " << (m.output_dir / "report.csv").string() << "\n";
}

namespace {

void write_svg_polyline(const std::filesystem::path& p,
                        const std::vector<std::pair<double, double>>& pts, bool scatter) {
    if (pts.empty()) return;
    double xmin = pts[0].first, xmax = xmin, ymin = pts[0].second, ymax = ymin;
    for (const auto& q : pts) {
        xmin = std::min(xmin, q.first);
        xmax = std::max(xmax, q.first);
        ymin = std::min(ymin, q.second);
        ymax = std::max(ymax, q.second);
    }
    const double w = 480, h = 360, pad = 30;
    const double sx = xmax > xmin ? (w - 2 * pad) / (xmax - xmin) : 1.0;
    const double sy = ymax > ymin ? (h - 2 * pad) / (ymax - ymin) : 1.0;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\" stroke=\"black\"/>\n";
    auto X = [&](double x) { return pad + (x - xmin) * sx; };
    auto Y = [&](double y) { return h - pad - (y - ymin) * sy; };
    if (scatter) {
        for (const auto& q : pts)
            os << "<circle cx=\"" << X(q.first) << "\" cy=\"" << Y(q.second)
               << "\" r=\"2.5\" fill=\"steelblue\"/>\n";
    } else {
        os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
        for (const auto& q : pts) os << X(q.first) << "," << Y(q.second) << " ";
        os << "\"/>\n";
    }
    os << "</svg>\n";
    write_file(p, os.str());
}

}  // namespace

void emit_plot_data(const std::filesystem::path& manifest_path, const std::string& kind,
                    std::ostream& log) {
    const RunManifest m = load_manifest(manifest_path);
    const auto dir = m.output_dir;
    if (kind == "kernel-decay") {
        int N = 100;
        for (const auto& e : m.experiments)
            if (e.type == "kernel-suite" && !e.degrees.empty()) N = e.degrees.back();
        std::ostringstream os;
        os.precision(17);
        os << "d,P_N,gauss\n";
        const ChartPoint o = ChartPoint::c1(Complex{0.0, 0.0});
        for (int j = 0; j <= 400; ++j) {
            const double d = 0.5 * kPi * j / 400.0 * 0.999;
            const double p = p_kernel(o, ChartPoint::c1(Complex{std::tan(d), 0.0}), N);
            os << d << "," << p << "," << std::exp(-0.5 * N * d * d) << "\n";
        }
        write_file(dir / "plot_kernel_decay.csv", os.str());
        log << "wrote " << (dir / "plot_kernel_decay.csv").string() << "\n";
        return;
    }
    if (kind == "rate") {
        for (const auto& e : m.experiments) {
            if (e.type != "hole") continue;
            const std::string* summary = find_output(e, "_summary.csv");
            Csv csv;
            if (!summary || !read_csv(dir / *summary, csv)) {
                log << "missing summary for " << e.name << "\n";
                continue;
            }
            std::ostringstream os;
            os.precision(17);
            os << "N,x_pow,neg_log_p\n";
            std::vector<std::pair<double, double>> pts;
            for (const auto& r : csv.rows) {
                const double p = std::stod(r[1]);
                if (p <= 0.0) continue;
                const double N = std::stod(r[0]);
                os << N << "," << N * N << "," << -std::log(p) << "\n";
                pts.push_back({N * N, -std::log(p)});
            }
            write_file(dir / ("plot_rate_" + e.name + ".csv"), os.str());
            write_svg_polyline(dir / ("plot_rate_" + e.name + ".svg"), pts, false);
            log << "wrote " << (dir / ("plot_rate_" + e.name + ".csv")).string() << "\n";
        }
        return;
    }
    if (kind == "histogram") {
        for (const auto& e : m.experiments) {
            const std::string* hist = find_output(e, "_hist.csv");
            if (!hist) continue;
            Csv csv;
            if (!read_csv(dir / *hist, csv)) continue;
            std::ostringstream os;
            os.precision(17);
            os << "N,count_over_n,frequency\n";
            // total per N first
            std::vector<std::pair<int, std::int64_t>> totals;
            for (const auto& r : csv.rows) {
                const int N = std::stoi(r[0]);
                bool found = false;
                for (auto& t : totals)
                    if (t.first == N) {
                        t.second += std::stoll(r[2]);
                        found = true;
                    }
                if (!found) totals.push_back({N, std::stoll(r[2])});
            }
            for (const auto& r : csv.rows) {
                const int N = std::stoi(r[0]);
                std::int64_t tot = 1;
                for (const auto& t : totals)
                    if (t.first == N) tot = t.second;
                os << N << "," << std::stod(r[1]) / N << ","
                   << std::stod(r[2]) / static_cast<double>(tot) << "\n";
            }
            write_file(dir / ("plot_hist_" + e.name + ".csv"), os.str());
            log << "wrote " << (dir / ("plot_hist_" + e.name + ".csv")).string() << "\n";
        }
        return;
    }
    if (kind == "scatter-zeros") {
        // zero scatter of trial 0 at the first experiment's largest degree
        int N = 50;
        if (!m.experiments.empty() && !m.experiments.front().degrees.empty())
            N = m.experiments.front().degrees.back();
        const PolySection s = sample_section({1, N, m.master_seed}, 0);
        const RootSet rs = find_roots(s);
        write_file(dir / "plot_zeros.csv", rootset_to_csv(rs));
        std::vector<std::pair<double, double>> pts;
        for (const Complex& z : rs.roots) pts.push_back({z.real(), z.imag()});
        write_svg_polyline(dir / "plot_zeros.svg", pts, true);
        log << "wrote " << (dir / "plot_zeros.csv").string() << "\n";
        return;
    }
    throw ValidationError("plot: unknown kind '" + kind +
                          "' (expected histogram|rate|kernel-decay|scatter-zeros)");
}

}  // namespace cpzeros
