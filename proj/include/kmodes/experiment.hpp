#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "kmodes/core.hpp"
#include "kmodes/dataset.hpp"
#include "kmodes/init.hpp"

namespace kmodes {

enum class ReportFormat { tsv, json };

ReportFormat report_format_from_string(std::string_view name);  // throws ConfigError

// One experiment: a dataset, an initializer, and a seeded batch of runs.
// k = 0 defers to the dataset's class count; runs = 0 defers to the method
// default (100 for random/bfph; nfph always runs once). Run r uses seed
// base_seed + r. `threads` is an execution detail and never appears in
// reports.
struct ExperimentConfig {
    std::string dataset_name;  // defaults to the path stem
    std::filesystem::path data_path;
    Schema schema;
    InitMethod method = InitMethod::random;
    std::size_t k = 0;
    std::size_t runs = 0;
    std::uint64_t base_seed = 0;
    std::size_t max_iters = kDefaultMaxIters;
    unsigned threads = 1;
};

struct RunRecord {
    std::size_t run = 0;
    std::uint64_t seed = 0;
    std::size_t iterations = 0;
    std::uint64_t objective = 0;
    std::optional<double> accuracy;  // fraction in [0,1]
    bool degenerate_centers = false;  // initial centers contained duplicate vectors

    bool operator==(const RunRecord&) const = default;
};

struct AccuracyStats {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    double stddev = 0.0;  // population

    bool operator==(const AccuracyStats&) const = default;
};

struct ExperimentReport {
    ExperimentConfig config;  // echo, with k/runs resolved
    std::string version;
    std::vector<RunRecord> runs;
    std::optional<AccuracyStats> accuracy;  // present when the dataset has labels
};

// Execute the configured batch against an already-loaded dataset. Runs are
// independent and may execute on cfg.threads threads; aggregation is always
// in run order, so the report does not depend on scheduling.
ExperimentReport run_experiment(const Dataset& ds, const ExperimentConfig& cfg);

// Convenience overload that loads cfg.data_path first.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// TSV: one header line, one line per run, one aggregate line. Accuracy
// appears both as a full-precision fraction (exact round-trip) and as a
// percent with two decimals.
void emit_tsv(const ExperimentReport& report, std::ostream& out);

nlohmann::ordered_json to_json(const ExperimentReport& report);

void emit_report(const ExperimentReport& report, ReportFormat format, std::ostream& out);

// One cell of the benchmark matrix: mean accuracy of (dataset, method), or an
// error message when that experiment failed.
struct BenchmarkCell {
    std::string dataset;
    InitMethod method = InitMethod::random;
    std::optional<double> mean_accuracy;  // fraction
    std::size_t runs = 0;
    std::string error;
};

struct BenchmarkReport {
    std::vector<std::string> datasets;   // row order
    std::vector<InitMethod> methods;     // column order
    std::vector<BenchmarkCell> cells;
    std::string version;

    const BenchmarkCell* find(std::string_view dataset, InitMethod method) const;
    // Column average over datasets with a value; empty when none.
    std::optional<double> column_average(InitMethod method) const;
};

// Run every config; failures become per-cell error entries instead of
// aborting the suite.
BenchmarkReport run_benchmark_suite(const std::vector<ExperimentConfig>& configs);

// Matrix TSV: dataset rows x method columns of mean accuracy in percent (two
// decimals), an "Avg." row, then one "error" line per failed cell.
void emit_benchmark_tsv(const BenchmarkReport& report, std::ostream& out);

nlohmann::ordered_json to_json(const BenchmarkReport& report);

void emit_benchmark_report(const BenchmarkReport& report, ReportFormat format, std::ostream& out);

// Expand a benchmark manifest (JSON: defaults plus a dataset list) into one
// config per dataset x method. Relative dataset paths resolve against the
// manifest's directory.
std::vector<ExperimentConfig> load_manifest(const std::filesystem::path& path);

}  // namespace kmodes
