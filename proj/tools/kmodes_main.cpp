#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "kmodes/experiment.hpp"
#include "kmodes/version.hpp"

namespace {

// "index" or "none"
std::optional<std::size_t> parse_class_col(const std::string& text) {
    if (text == "none") return std::nullopt;
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw kmodes::ConfigError("--class-col expects an index or \"none\", got: " + text);
    }
}

int write_output(const std::string& out_path, const std::function<void(std::ostream&)>& emit) {
    if (out_path == "stdout" || out_path == "-") {
        emit(std::cout);
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) throw kmodes::IoError("cannot open output file " + out_path);
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-modes categorical clustering and benchmark harness"};
    app.set_version_flag("--version", std::string(kmodes::kVersion));

    // single-experiment flags
    std::string data_path;
    std::string class_col = "none";
    std::string delimiter = ",";
    std::string missing = "?";
    bool skip_header = false;
    std::size_t k = 0;
    std::string init = "random";
    std::size_t runs = 0;
    std::uint64_t seed = 0;
    std::size_t max_iters = kmodes::kDefaultMaxIters;
    unsigned threads = 1;
    std::string format = "tsv";
    std::string out_path = "stdout";

    app.add_option("--data", data_path, "dataset file (delimited text, one object per line)");
    app.add_option("--class-col", class_col, "raw column index of the class label, or \"none\"")
        ->capture_default_str();
    app.add_option("--delimiter", delimiter, "field delimiter")->capture_default_str();
    app.add_option("--missing", missing, "missing-value token (kept as a regular category)")
        ->capture_default_str();
    app.add_flag("--skip-header", skip_header, "skip the first line");
    app.add_option("--k", k, "cluster count (default: the dataset's class count)");
    app.add_option("--init", init, "initializer: random|bfph|nfph")->capture_default_str();
    app.add_option("--runs", runs, "seeded runs (default 100; nfph always runs once)");
    app.add_option("--seed", seed, "base seed; run r uses base seed + r")->capture_default_str();
    app.add_option("--max-iters", max_iters, "iteration budget per run")->capture_default_str();
    app.add_option("--threads", threads, "worker threads for the run batch")
        ->capture_default_str();
    app.add_option("--format", format, "report format: tsv|json")->capture_default_str();
    app.add_option("--out", out_path, "output path or \"stdout\"")->capture_default_str();

    // bench subcommand
    CLI::App* bench = app.add_subcommand("bench", "run a manifest of dataset x method cells");
    std::string manifest_path;
    std::string bench_format = "tsv";
    std::string bench_out = "stdout";
    std::optional<std::uint64_t> bench_seed;
    std::optional<std::size_t> bench_runs;
    bench->add_option("--manifest", manifest_path, "benchmark manifest (JSON)")->required();
    bench->add_option("--format", bench_format, "report format: tsv|json")
        ->capture_default_str();
    bench->add_option("--out", bench_out, "output path or \"stdout\"")->capture_default_str();
    bench->add_option("--seed", bench_seed, "override the manifest base seed");
    bench->add_option("--runs", bench_runs, "override the manifest run count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bench->parsed()) {
            std::vector<kmodes::ExperimentConfig> configs = kmodes::load_manifest(manifest_path);
            for (kmodes::ExperimentConfig& cfg : configs) {
                if (bench_seed) cfg.base_seed = *bench_seed;
                if (bench_runs) cfg.runs = *bench_runs;
            }
            const kmodes::BenchmarkReport report = kmodes::run_benchmark_suite(configs);
            const kmodes::ReportFormat fmt = kmodes::report_format_from_string(bench_format);
            write_output(bench_out, [&](std::ostream& out) {
                kmodes::emit_benchmark_report(report, fmt, out);
            });
            // the report is emitted either way; failed cells still mean failure
            for (const auto& cell : report.cells) {
                if (!cell.error.empty()) return 1;
            }
            return 0;
        }

        if (data_path.empty()) {
            std::cerr << "error: --data is required (or use the bench subcommand)\n";
            return 1;
        }
        if (delimiter.size() != 1) {
            std::cerr << "error: --delimiter expects a single character\n";
            return 1;
        }
        kmodes::ExperimentConfig cfg;
        cfg.data_path = data_path;
        cfg.schema.class_column = parse_class_col(class_col);
        cfg.schema.delimiter = delimiter[0];
        cfg.schema.missing_token = missing;
        cfg.schema.skip_header = skip_header;
        cfg.method = kmodes::init_method_from_string(init);
        cfg.k = k;
        cfg.runs = runs;
        cfg.base_seed = seed;
        cfg.max_iters = max_iters;
        cfg.threads = threads;

        const kmodes::ExperimentReport report = kmodes::run_experiment(cfg);
        const kmodes::ReportFormat fmt = kmodes::report_format_from_string(format);
        return write_output(out_path,
                            [&](std::ostream& out) { kmodes::emit_report(report, fmt, out); });
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
