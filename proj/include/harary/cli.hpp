#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "harary/clusterer.hpp"
#include "harary/io.hpp"

namespace harary::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,        // parse or I/O failure
  kUsageError = 2,     // invalid flags or mismatched label file
  kPropertyFailed = 3, // verify-duality found a violation
};

/// Everything needed to replay a `cluster` run.
struct RunManifest {
  std::string input;
  InputFormat format = InputFormat::konect;
  Config config;
  double elapsed_s = 0.0;
  std::int64_t clusters = 0;
  std::int64_t clusters_ge5 = 0;
  std::int64_t clusters_lt5 = 0;
  std::int64_t splits = 0;
  double pos_in = 0.0;
  double neg_out = 0.0;
  double overall_loss = 0.0;
  std::string labels_path;
  std::string trace_path;
};

std::string to_json(const RunManifest& m);
/// Throws Error on malformed JSON or missing fields.
RunManifest manifest_from_json(const std::string& text);

/// Sets one Config field by its flag name (iterations, alpha, beta, epsilon,
/// gamma, time-limit, seed, tree-method, threads). Integer values accept
/// "n" and "n/K", resolved against `vertex_count`.
void apply_parameter(Config& config, const std::string& name, const std::string& value,
                     std::int64_t vertex_count);

struct SweepSpec {
  std::string param;
  std::vector<std::string> values;
};

/// Parses "param=v1,v2,...". Throws ConfigError.
SweepSpec parse_sweep(const std::string& text);

struct BenchRow {
  std::string dataset;
  std::string param;
  std::string value;
  std::size_t sweep_index = 0;
  double pos_in = 0.0;
  double neg_out = 0.0;
  std::int64_t splits = 0;
  std::int64_t clusters = 0;
  double time_s = 0.0;
};

struct BenchOptions {
  std::filesystem::path dir;
  InputFormat format = InputFormat::konect;
  Config base;
  std::optional<SweepSpec> sweep;
};

struct BenchOutcome {
  std::vector<BenchRow> rows;  // sorted by dataset, param, sweep position
  std::vector<std::string> failures;
};

/// Clusters every regular file in `dir` for each sweep value. Throws
/// ConfigError when the directory holds no files.
BenchOutcome run_bench(const BenchOptions& options);

std::string format_bench_row(const BenchRow& row);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harary::cli
