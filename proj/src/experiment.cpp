#include "kmodes/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>
#include <utility>

#include "kmodes/eval.hpp"
#include "kmodes/version.hpp"

namespace kmodes {

namespace {

// Shortest representation that round-trips the exact double.
std::string fmt_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

// Table-2 presentation: percent with two decimals.
std::string fmt_percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", fraction * 100.0);
    return buf;
}

bool has_duplicate_centers(const std::vector<Center>& centers) {
    for (std::size_t a = 0; a + 1 < centers.size(); ++a) {
        for (std::size_t b = a + 1; b < centers.size(); ++b) {
            if (centers[a] == centers[b]) return true;
        }
    }
    return false;
}

ExperimentConfig normalize(ExperimentConfig cfg, const Dataset& ds) {
    if (cfg.k == 0) {
        if (!ds.has_labels()) {
            throw ConfigError("k not given and dataset has no class column");
        }
        cfg.k = ds.class_count();
    }
    if (cfg.k > ds.n()) {
        throw ConfigError("k = " + std::to_string(cfg.k) + " exceeds object count " +
                          std::to_string(ds.n()));
    }
    if (cfg.method == InitMethod::nfph) {
        cfg.runs = 1;  // deterministic: repeated runs would be identical
    } else if (cfg.runs == 0) {
        cfg.runs = 100;
    }
    if (cfg.max_iters < 1) throw ConfigError("max_iters must be at least 1");
    if (cfg.threads < 1) cfg.threads = 1;
    if (cfg.dataset_name.empty()) {
        cfg.dataset_name = cfg.data_path.empty() ? "dataset" : cfg.data_path.stem().string();
    }
    return cfg;
}

RunRecord execute_run(const Dataset& ds, const ExperimentConfig& cfg, std::size_t r) {
    RunRecord rec;
    rec.run = r;
    rec.seed = cfg.base_seed + r;
    InitResult init = make_centers(ds, InitSpec{cfg.method, rec.seed, cfg.k});
    rec.degenerate_centers = has_duplicate_centers(init.centers);
    RunResult run = kmodes(ds, std::move(init.centers), cfg.max_iters);
    rec.iterations = run.iterations;
    rec.objective = run.objective;
    if (ds.has_labels()) {
        rec.accuracy = clustering_accuracy(run.assignment, ds.labels()).accuracy;
    }
    return rec;
}

AccuracyStats accuracy_stats(const std::vector<RunRecord>& runs) {
    AccuracyStats stats;
    stats.min = runs.front().accuracy.value();
    stats.max = stats.min;
    double sum = 0.0;
    for (const RunRecord& rec : runs) {
        const double a = rec.accuracy.value();
        sum += a;
        stats.min = std::min(stats.min, a);
        stats.max = std::max(stats.max, a);
    }
    stats.mean = sum / static_cast<double>(runs.size());
    double sq = 0.0;
    for (const RunRecord& rec : runs) {
        const double d = rec.accuracy.value() - stats.mean;
        sq += d * d;
    }
    stats.stddev = std::sqrt(sq / static_cast<double>(runs.size()));
    return stats;
}

nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::ordered_json j;
    j["dataset"] = cfg.dataset_name;
    j["path"] = cfg.data_path.string();
    j["delimiter"] = std::string(1, cfg.schema.delimiter);
    if (cfg.schema.class_column) {
        j["class_col"] = *cfg.schema.class_column;
    } else {
        j["class_col"] = nullptr;
    }
    j["missing"] = cfg.schema.missing_token;
    j["skip_header"] = cfg.schema.skip_header;
    j["init"] = to_string(cfg.method);
    j["k"] = cfg.k;
    j["runs"] = cfg.runs;
    j["base_seed"] = cfg.base_seed;
    j["max_iters"] = cfg.max_iters;
    return j;
}

}  // namespace

ReportFormat report_format_from_string(std::string_view name) {
    if (name == "tsv") return ReportFormat::tsv;
    if (name == "json") return ReportFormat::json;
    throw ConfigError("unknown report format: " + std::string(name));
}

ExperimentReport run_experiment(const Dataset& ds, const ExperimentConfig& raw) {
    ExperimentReport report;
    report.config = normalize(raw, ds);
    report.version = kVersion;
    const ExperimentConfig& cfg = report.config;

    report.runs.resize(cfg.runs);
    if (cfg.threads == 1 || cfg.runs == 1) {
        for (std::size_t r = 0; r < cfg.runs; ++r) report.runs[r] = execute_run(ds, cfg, r);
    } else {
        // each run is a pure function of (ds, cfg, r); threads just pull the
        // next index and fill their slot
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (;;) {
                const std::size_t r = next.fetch_add(1);
                if (r >= cfg.runs) return;
                try {
                    report.runs[r] = execute_run(ds, cfg, r);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        const unsigned count = std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.runs));
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    if (ds.has_labels()) report.accuracy = accuracy_stats(report.runs);
    return report;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    const Dataset ds = load_dataset(cfg.data_path, cfg.schema);
    return run_experiment(ds, cfg);
}

void emit_tsv(const ExperimentReport& report, std::ostream& out) {
    out << "run\tseed\titerations\tobjective\taccuracy\taccuracy_pct\tdegenerate_centers\n";
    for (const RunRecord& rec : report.runs) {
        out << rec.run << '\t' << rec.seed << '\t' << rec.iterations << '\t' << rec.objective
            << '\t';
        if (rec.accuracy) {
            out << fmt_double(*rec.accuracy) << '\t' << fmt_percent(*rec.accuracy);
        } else {
            out << "-\t-";
        }
        out << '\t' << (rec.degenerate_centers ? 1 : 0) << '\n';
    }
    out << "aggregate\truns=" << report.runs.size();
    if (report.accuracy) {
        const AccuracyStats& s = *report.accuracy;
        out << "\tmean=" << fmt_double(s.mean) << "\tmin=" << fmt_double(s.min)
            << "\tmax=" << fmt_double(s.max) << "\tstddev=" << fmt_double(s.stddev)
            << "\tmean_pct=" << fmt_percent(s.mean);
    } else {
        out << "\tmean=-\tmin=-\tmax=-\tstddev=-\tmean_pct=-";
    }
    // config echo so a tsv report is self-describing
    out << "\tdataset=" << report.config.dataset_name
        << "\tinit=" << to_string(report.config.method) << "\tk=" << report.config.k
        << "\tbase_seed=" << report.config.base_seed
        << "\tmax_iters=" << report.config.max_iters << "\tversion=" << report.version << '\n';
    if (!out) throw IoError("failed to write report");
}

nlohmann::ordered_json to_json(const ExperimentReport& report) {
    nlohmann::ordered_json j;
    j["toolkit"] = {{"name", kToolkitName}, {"version", report.version}};
    j["config"] = config_to_json(report.config);
    j["runs"] = nlohmann::ordered_json::array();
    for (const RunRecord& rec : report.runs) {
        nlohmann::ordered_json r;
        r["run"] = rec.run;
        r["seed"] = rec.seed;
        r["iterations"] = rec.iterations;
        r["objective"] = rec.objective;
        if (rec.accuracy) {
            r["accuracy"] = *rec.accuracy;
        } else {
            r["accuracy"] = nullptr;
        }
        r["degenerate_centers"] = rec.degenerate_centers;
        j["runs"].push_back(std::move(r));
    }
    if (report.accuracy) {
        j["accuracy"] = {{"mean", report.accuracy->mean},
                         {"min", report.accuracy->min},
                         {"max", report.accuracy->max},
                         {"stddev", report.accuracy->stddev}};
    } else {
        j["accuracy"] = nullptr;
    }
    return j;
}

void emit_report(const ExperimentReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::tsv) {
        emit_tsv(report, out);
    } else {
        out << to_json(report).dump(2) << '\n';
        if (!out) throw IoError("failed to write report");
    }
}

const BenchmarkCell* BenchmarkReport::find(std::string_view dataset, InitMethod method) const {
    for (const BenchmarkCell& cell : cells) {
        if (cell.dataset == dataset && cell.method == method) return &cell;
    }
    return nullptr;
}

std::optional<double> BenchmarkReport::column_average(InitMethod method) const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const BenchmarkCell& cell : cells) {
        if (cell.method == method && cell.mean_accuracy) {
            sum += *cell.mean_accuracy;
            ++count;
        }
    }
    if (count == 0) return std::nullopt;
    return sum / static_cast<double>(count);
}

BenchmarkReport run_benchmark_suite(const std::vector<ExperimentConfig>& configs) {
    BenchmarkReport report;
    report.version = kVersion;
    for (const ExperimentConfig& cfg : configs) {
        BenchmarkCell cell;
        cell.dataset = cfg.dataset_name.empty()
                           ? (cfg.data_path.empty() ? "dataset" : cfg.data_path.stem().string())
                           : cfg.dataset_name;
        cell.method = cfg.method;
        try {
            ExperimentReport result = run_experiment(cfg);
            cell.runs = result.runs.size();
            if (result.accuracy) {
                cell.mean_accuracy = result.accuracy->mean;
            } else {
                cell.error = "dataset has no class labels to score";
            }
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
        if (std::find(report.datasets.begin(), report.datasets.end(), cell.dataset) ==
            report.datasets.end()) {
            report.datasets.push_back(cell.dataset);
        }
        if (std::find(report.methods.begin(), report.methods.end(), cell.method) ==
            report.methods.end()) {
            report.methods.push_back(cell.method);
        }
        report.cells.push_back(std::move(cell));
    }
    return report;
}

void emit_benchmark_tsv(const BenchmarkReport& report, std::ostream& out) {
    out << "dataset";
    for (InitMethod method : report.methods) out << '\t' << to_string(method);
    out << '\n';
    for (const std::string& dataset : report.datasets) {
        out << dataset;
        for (InitMethod method : report.methods) {
            const BenchmarkCell* cell = report.find(dataset, method);
            if (cell != nullptr && cell->mean_accuracy) {
                out << '\t' << fmt_percent(*cell->mean_accuracy);
            } else {
                out << "\t-";
            }
        }
        out << '\n';
    }
    out << "Avg.";
    for (InitMethod method : report.methods) {
        const std::optional<double> avg = report.column_average(method);
        if (avg) {
            out << '\t' << fmt_percent(*avg);
        } else {
            out << "\t-";
        }
    }
    out << '\n';
    for (const BenchmarkCell& cell : report.cells) {
        if (!cell.error.empty()) {
            out << "error\t" << cell.dataset << '\t' << to_string(cell.method) << '\t'
                << cell.error << '\n';
        }
    }
    if (!out) throw IoError("failed to write report");
}

nlohmann::ordered_json to_json(const BenchmarkReport& report) {
    nlohmann::ordered_json j;
    j["toolkit"] = {{"name", kToolkitName}, {"version", report.version}};
    j["datasets"] = report.datasets;
    j["methods"] = nlohmann::ordered_json::array();
    for (InitMethod method : report.methods) j["methods"].push_back(to_string(method));
    j["cells"] = nlohmann::ordered_json::array();
    for (const BenchmarkCell& cell : report.cells) {
        nlohmann::ordered_json c;
        c["dataset"] = cell.dataset;
        c["method"] = to_string(cell.method);
        c["runs"] = cell.runs;
        if (cell.mean_accuracy) {
            c["mean_accuracy"] = *cell.mean_accuracy;
            c["mean_accuracy_pct"] = fmt_percent(*cell.mean_accuracy);
        } else {
            c["mean_accuracy"] = nullptr;
            c["mean_accuracy_pct"] = nullptr;
        }
        if (cell.error.empty()) {
            c["error"] = nullptr;
        } else {
            c["error"] = cell.error;
        }
        j["cells"].push_back(std::move(c));
    }
    j["average"] = nlohmann::ordered_json::object();
    for (InitMethod method : report.methods) {
        const std::optional<double> avg = report.column_average(method);
        if (avg) {
            j["average"][std::string(to_string(method))] = *avg;
        } else {
            j["average"][std::string(to_string(method))] = nullptr;
        }
    }
    return j;
}

void emit_benchmark_report(const BenchmarkReport& report, ReportFormat format,
                           std::ostream& out) {
    if (format == ReportFormat::tsv) {
        emit_benchmark_tsv(report, out);
    } else {
        out << to_json(report).dump(2) << '\n';
        if (!out) throw IoError("failed to write report");
    }
}

std::vector<ExperimentConfig> load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("manifest " + path.string() + ": " + e.what());
    }

    ExperimentConfig defaults;
    defaults.runs = j.value("runs", std::size_t{0});
    defaults.base_seed = j.value("base_seed", std::uint64_t{0});
    defaults.max_iters = j.value("max_iters", kDefaultMaxIters);
    defaults.threads = j.value("threads", 1u);

    std::vector<InitMethod> methods;
    if (j.contains("methods")) {
        for (const auto& name : j.at("methods")) {
            methods.push_back(init_method_from_string(name.get<std::string>()));
        }
    } else {
        methods = {InitMethod::random, InitMethod::bfph, InitMethod::nfph};
    }
    if (methods.empty()) throw ConfigError("manifest lists no methods");
    if (!j.contains("datasets") || !j.at("datasets").is_array() || j.at("datasets").empty()) {
        throw ConfigError("manifest lists no datasets");
    }

    std::vector<ExperimentConfig> configs;
    for (const auto& d : j.at("datasets")) {
        ExperimentConfig base = defaults;
        base.dataset_name = d.value("name", std::string{});
        std::filesystem::path data_path = d.at("path").get<std::string>();
        if (data_path.is_relative()) {
            data_path = (path.parent_path() / data_path).lexically_normal();
        }
        base.data_path = std::move(data_path);

        const std::string delim = d.value("delimiter", std::string{","});
        if (delim.size() != 1) throw ConfigError("delimiter must be a single character");
        base.schema.delimiter = delim[0];
        if (d.contains("class_col") && !d.at("class_col").is_null()) {
            if (d.at("class_col").is_string()) {
                if (d.at("class_col").get<std::string>() != "none") {
                    throw ConfigError("class_col must be an index or \"none\"");
                }
            } else {
                base.schema.class_column = d.at("class_col").get<std::size_t>();
            }
        }
        base.schema.missing_token = d.value("missing", std::string{"?"});
        base.schema.skip_header = d.value("skip_header", false);
        base.k = d.value("k", std::size_t{0});

        for (InitMethod method : methods) {
            ExperimentConfig cfg = base;
            cfg.method = method;
            configs.push_back(std::move(cfg));
        }
    }
    return configs;
}

}  // namespace kmodes
