#include "harary/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "harary/duality_suite.hpp"
#include "harary/report.hpp"

namespace harary::cli {

namespace {

using nlohmann::json;

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

// String-valued options so that parameter validation reports ConfigError
// (exit 2) consistently with --sweep values.
struct ConfigFlags {
  std::string iterations, alpha, beta, epsilon, gamma, time_limit, seed, tree_method, threads;
  bool refine = false;

  void attach(CLI::App& app) {
    app.add_option("-I,--iterations", iterations, "spanning trees sampled per Harary cut (1000)");
    app.add_option("--alpha", alpha, "weight of pos_out against neg_in (0.5)");
    app.add_option("--beta", beta, "weight of edge terms against isolated vertices (1)");
    app.add_option("--epsilon", epsilon, "minimum overall-loss improvement to commit (1e-8)");
    app.add_option("--gamma", gamma, "skip components with at most this many vertices (2)");
    app.add_option("--time-limit", time_limit, "seconds, -1 for no limit (-1)");
    app.add_option("--seed", seed, "random seed (42)");
    app.add_option("--tree-method", tree_method, "random-bfs | random-kruskal (random-bfs)");
    app.add_option("--threads", threads, "worker threads, 0 for the OpenMP default (0)");
    app.add_flag("--refine", refine, "greedy local flips after each sampled tree");
  }

  Config resolve(std::int64_t vertex_count = 0) const {
    Config c;
    const std::pair<const char*, const std::string*> fields[] = {
        {"iterations", &iterations}, {"alpha", &alpha},
        {"beta", &beta},             {"epsilon", &epsilon},
        {"gamma", &gamma},           {"time-limit", &time_limit},
        {"seed", &seed},             {"tree-method", &tree_method},
        {"threads", &threads}};
    for (const auto& [name, value] : fields) {
      if (!value->empty()) apply_parameter(c, name, *value, vertex_count);
    }
    c.refine = refine;
    c.validate();
    return c;
  }
};

std::int64_t parse_int(const std::string& name, const std::string& value, std::int64_t n) {
  try {
    if (value == "n") return n;
    if (value.rfind("n/", 0) == 0) {
      const auto k = std::stoll(value.substr(2));
      if (k <= 0) throw ConfigError("divisor must be positive");
      return n / k;
    }
    std::size_t used = 0;
    const auto v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::logic_error&) {
    throw ConfigError("invalid integer for " + name + ": '" + value + "'");
  }
}

double parse_double(const std::string& name, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::logic_error&) {
    throw ConfigError("invalid number for " + name + ": '" + value + "'");
  }
}

std::uint64_t parse_seed(const std::string& value) {
  try {
    std::size_t used = 0;
    if (!value.empty() && value.front() == '-') throw std::invalid_argument(value);
    const auto v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::logic_error&) {
    throw ConfigError("invalid seed '" + value + "'");
  }
}

json config_to_json(const Config& c) {
  return json{{"iterations", c.iterations},
              {"alpha", c.alpha},
              {"beta", c.beta},
              {"epsilon", c.epsilon},
              {"gamma", c.gamma},
              {"time_limit_s", c.time_limit_s},
              {"seed", c.seed},
              {"tree_method", std::string(to_string(c.tree_method))},
              {"threads", c.threads},
              {"refine", c.refine}};
}

Config config_from_json(const json& j) {
  Config c;
  c.iterations = j.at("iterations").get<std::int64_t>();
  c.alpha = j.at("alpha").get<double>();
  c.beta = j.at("beta").get<double>();
  c.epsilon = j.at("epsilon").get<double>();
  c.gamma = j.at("gamma").get<std::int64_t>();
  c.time_limit_s = j.at("time_limit_s").get<std::int64_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.tree_method = parse_tree_method(j.at("tree_method").get<std::string>());
  c.threads = j.value("threads", 0);
  c.refine = j.value("refine", false);
  return c;
}

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

// ---------------------------------------------------------------- cluster

struct ClusterArgs {
  std::string input;
  std::string format = "konect";
  ConfigFlags flags;
  std::string labels, trace, manifest, replay;
};

int cmd_cluster(const ClusterArgs& args, std::ostream& out) {
  RunManifest m;
  if (!args.replay.empty()) {
    m = manifest_from_json(read_file(args.replay));
  } else {
    if (args.input.empty()) throw UsageError("--input is required");
    m.input = args.input;
    m.format = parse_input_format(args.format);
    m.config = args.flags.resolve();
  }
  const auto g = load_graph(m.input, m.format);
  const auto r = run(g, m.config);

  m.elapsed_s = r.elapsed_s;
  m.clusters = r.clusters;
  m.clusters_ge5 = r.clusters_ge5;
  m.clusters_lt5 = r.clusters_lt5;
  m.splits = r.split_count;
  m.pos_in = r.metrics.pos_in;
  m.neg_out = r.metrics.neg_out;
  m.overall_loss = r.metrics.overall_loss;
  m.labels_path = args.labels;
  m.trace_path = args.trace;

  if (!args.labels.empty()) {
    std::ostringstream os;
    write_labels_csv(os, g, r.labels);
    write_file(args.labels, os.str());
  }
  if (!args.trace.empty()) {
    std::ostringstream os;
    write_trace_csv(os, r.trace);
    write_file(args.trace, os.str());
  }
  if (!args.manifest.empty()) write_file(args.manifest, to_json(m));
  out << summary_line(r) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- metrics

struct MetricsArgs {
  std::string input;
  std::string format = "konect";
  std::string labels;
  double alpha = 0.5;
  double beta = 1.0;
};

int cmd_metrics(const MetricsArgs& args, std::ostream& out) {
  const auto g = load_graph(args.input, parse_input_format(args.format));
  std::ifstream in(args.labels);
  if (!in) throw Error("cannot open '" + args.labels + "'");
  const auto labels = read_labels_csv(in, g);
  write_metrics(out, evaluate(g, labels, args.alpha, args.beta));
  return kOk;
}

// ---------------------------------------------------------- verify-duality

struct DualityArgs {
  int n_max = 8;
  int trials = 20;
  std::uint64_t seed = 42;
  bool inject_unbalanced = false;
};

void print_spectra(std::ostream& out) {
  const auto rows = reference_spectra();
  out << "Laplacian spectra of K4 minus an edge (edges 01 02 03 12 23)\n";
  out << std::left << std::setw(8) << "graph" << std::setw(12) << "state" << "eigenvalues\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(8) << row.name << std::setw(12)
        << (row.balanced ? "balanced" : "unbalanced");
    for (Eigen::Index k = 0; k < row.system.values.size(); ++k) {
      out << std::right << std::setw(10) << fixed(row.system.values(k), 6);
    }
    out << '\n';
  }
  out << "eigenvectors (one column per eigenvalue)\n";
  for (const auto& row : rows) {
    out << row.name << '\n';
    const auto& vecs = row.system.vectors;
    for (Eigen::Index i = 0; i < vecs.rows(); ++i) {
      out << "  ";
      for (Eigen::Index k = 0; k < vecs.cols(); ++k) {
        const double x = std::abs(vecs(i, k)) < 5e-13 ? 0.0 : vecs(i, k);
        out << std::right << std::setw(10) << fixed(x, 6);
      }
      out << '\n';
    }
  }
}

int cmd_verify_duality(const DualityArgs& args, std::ostream& out) {
  DualitySuiteOptions opt;
  opt.n_max = args.n_max;
  opt.trials = args.trials;
  opt.seed = args.seed;
  opt.inject_unbalanced = args.inject_unbalanced;
  const auto outcomes = run_duality_suite(opt);  // validates before printing
  print_spectra(out);
  bool ok = true;
  for (const auto& o : outcomes) {
    out << (o.passed ? "PASS " : "FAIL ") << o.name << ": " << o.detail << '\n';
    if (!o.passed) {
      ok = false;
      if (o.counterexample) {
        out << "counterexample:\n" << format_edge_list(*o.counterexample);
      }
    }
  }
  return ok ? kOk : kPropertyFailed;
}

// ------------------------------------------------------------------ bench

struct BenchArgs {
  std::string dir;
  std::string format = "konect";
  std::string sweep;
  std::string output;
  ConfigFlags flags;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  BenchOptions opt;
  opt.dir = args.dir;
  opt.format = parse_input_format(args.format);
  opt.base = args.flags.resolve();
  if (!args.sweep.empty()) opt.sweep = parse_sweep(args.sweep);
  if (!std::filesystem::is_directory(opt.dir)) throw Error("not a directory: '" + args.dir + "'");

  const auto outcome = run_bench(opt);
  std::ostringstream csv;
  csv << kBenchHeader << '\n';
  for (const auto& row : outcome.rows) csv << format_bench_row(row) << '\n';
  if (args.output.empty()) {
    out << csv.str();
  } else {
    write_file(args.output, csv.str());
  }
  for (const auto& f : outcome.failures) err << "bench: " << f << '\n';
  return outcome.failures.empty() ? kOk : kIoError;
}

}  // namespace

std::string to_json(const RunManifest& m) {
  const json j{{"tool", "harary-clust"},
               {"command", "cluster"},
               {"input", m.input},
               {"format", std::string(to_string(m.format))},
               {"config", config_to_json(m.config)},
               {"elapsed_s", m.elapsed_s},
               {"summary",
                {{"clusters", m.clusters},
                 {"clusters_ge5", m.clusters_ge5},
                 {"clusters_lt5", m.clusters_lt5},
                 {"splits", m.splits},
                 {"pos_in", m.pos_in},
                 {"neg_out", m.neg_out},
                 {"overall_loss", m.overall_loss}}},
               {"outputs", {{"labels", m.labels_path}, {"trace", m.trace_path}}}};
  return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
  try {
    const auto j = json::parse(text);
    RunManifest m;
    m.input = j.at("input").get<std::string>();
    m.format = parse_input_format(j.at("format").get<std::string>());
    m.config = config_from_json(j.at("config"));
    m.config.validate();
    if (j.contains("summary")) {
      const auto& s = j.at("summary");
      m.clusters = s.value("clusters", std::int64_t{0});
      m.clusters_ge5 = s.value("clusters_ge5", std::int64_t{0});
      m.clusters_lt5 = s.value("clusters_lt5", std::int64_t{0});
      m.splits = s.value("splits", std::int64_t{0});
      m.pos_in = s.value("pos_in", 0.0);
      m.neg_out = s.value("neg_out", 0.0);
      m.overall_loss = s.value("overall_loss", 0.0);
    }
    m.elapsed_s = j.value("elapsed_s", 0.0);
    if (j.contains("outputs")) {
      m.labels_path = j.at("outputs").value("labels", std::string{});
      m.trace_path = j.at("outputs").value("trace", std::string{});
    }
    return m;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed manifest: ") + e.what());
  }
}

void apply_parameter(Config& config, const std::string& name, const std::string& value,
                     std::int64_t vertex_count) {
  if (name == "iterations" || name == "I") {
    config.iterations = parse_int(name, value, vertex_count);
  } else if (name == "alpha") {
    config.alpha = parse_double(name, value);
  } else if (name == "beta") {
    config.beta = parse_double(name, value);
  } else if (name == "epsilon") {
    config.epsilon = parse_double(name, value);
  } else if (name == "gamma") {
    config.gamma = parse_int(name, value, vertex_count);
  } else if (name == "time-limit") {
    config.time_limit_s = parse_int(name, value, vertex_count);
  } else if (name == "seed") {
    config.seed = parse_seed(value);
  } else if (name == "tree-method") {
    config.tree_method = parse_tree_method(value);
  } else if (name == "threads") {
    config.threads = static_cast<int>(parse_int(name, value, vertex_count));
  } else {
    throw ConfigError("unknown parameter '" + name + "'");
  }
}

SweepSpec parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw ConfigError("sweep must look like param=v1,v2,...");
  }
  SweepSpec s;
  s.param = text.substr(0, eq);
  std::stringstream values(text.substr(eq + 1));
  std::string v;
  while (std::getline(values, v, ',')) {
    if (v.empty()) throw ConfigError("empty sweep value");
    s.values.push_back(v);
  }
  Config probe;
  for (const auto& value : s.values) apply_parameter(probe, s.param, value, 1);
  return s;
}

BenchOutcome run_bench(const BenchOptions& options) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(options.dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (files.empty()) throw ConfigError("no dataset files in '" + options.dir.string() + "'");
  std::sort(files.begin(), files.end());

  BenchOutcome outcome;
  for (const auto& file : files) {
    const std::string dataset = file.filename().string();
    try {
      const auto g = load_graph(file, options.format);
      const std::vector<std::string> values =
          options.sweep ? options.sweep->values : std::vector<std::string>{""};
      for (std::size_t i = 0; i < values.size(); ++i) {
        Config c = options.base;
        BenchRow row;
        row.dataset = dataset;
        row.sweep_index = i;
        if (options.sweep) {
          row.param = options.sweep->param;
          row.value = values[i];
          apply_parameter(c, row.param, row.value, g.vertex_count());
        } else {
          row.param = "none";
        }
        c.validate();
        const auto r = run(g, c);
        row.pos_in = r.metrics.pos_in;
        row.neg_out = r.metrics.neg_out;
        row.splits = r.split_count;
        row.clusters = r.clusters;
        row.time_s = r.elapsed_s;
        outcome.rows.push_back(row);
      }
    } catch (const std::exception& e) {
      outcome.failures.push_back(dataset + ": " + e.what());
    }
  }
  std::sort(outcome.rows.begin(), outcome.rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.dataset, a.param, a.sweep_index) <
           std::tie(b.dataset, b.param, b.sweep_index);
  });
  return outcome;
}

std::string format_bench_row(const BenchRow& row) {
  std::ostringstream os;
  os << row.dataset << ',' << row.param << ',' << row.value << ',' << fixed(row.pos_in, 4) << ','
     << fixed(row.neg_out, 4) << ',' << row.splits << ',' << row.clusters << ','
     << fixed(row.time_s, 4);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"harary-clust: hierarchical signed-graph clustering by Harary cuts",
               "harary-clust"};
  app.require_subcommand(1);

  ClusterArgs cluster_args;
  auto* cluster = app.add_subcommand("cluster", "cluster a signed graph");
  cluster->add_option("--input", cluster_args.input, "edge list file");
  cluster->add_option("--format", cluster_args.format, "konect | amazon-ratings");
  cluster_args.flags.attach(*cluster);
  cluster->add_option("--labels", cluster_args.labels, "write vertex,cluster CSV");
  cluster->add_option("--trace", cluster_args.trace, "write per-split trace CSV");
  cluster->add_option("--manifest", cluster_args.manifest, "write run manifest JSON");
  cluster->add_option("--replay", cluster_args.replay, "rerun the input and config of a manifest");

  MetricsArgs metrics_args;
  auto* metrics = app.add_subcommand("metrics", "score a labeling of a signed graph");
  metrics->add_option("--input", metrics_args.input, "edge list file")->required();
  metrics->add_option("--format", metrics_args.format, "konect | amazon-ratings");
  metrics->add_option("--labels", metrics_args.labels, "vertex,cluster CSV")->required();
  metrics->add_option("--alpha", metrics_args.alpha, "loss weight alpha (0.5)");
  metrics->add_option("--beta", metrics_args.beta, "loss weight beta (1)");

  DualityArgs duality_args;
  auto* duality = app.add_subcommand("verify-duality", "check balance/spectrum duality properties");
  duality->add_option("--n-max", duality_args.n_max, "largest random graph (8)");
  duality->add_option("--trials", duality_args.trials, "random graphs per property (20)");
  duality->add_option("--seed", duality_args.seed, "random seed (42)");
  duality->add_flag("--inject-unbalanced", duality_args.inject_unbalanced)->group("");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "cluster every file of a directory over a sweep");
  bench->add_option("--dir", bench_args.dir, "dataset directory")->required();
  bench->add_option("--format", bench_args.format, "konect | amazon-ratings");
  bench->add_option("--sweep", bench_args.sweep, "param=v1,v2,... (integers accept n and n/K)");
  bench->add_option("--output", bench_args.output, "write CSV here instead of stdout");
  bench_args.flags.attach(*bench);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (cluster->parsed()) return cmd_cluster(cluster_args, out);
    if (metrics->parsed()) return cmd_metrics(metrics_args, out);
    if (duality->parsed()) return cmd_verify_duality(duality_args, out);
    if (bench->parsed()) return cmd_bench(bench_args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const LabelFileError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsageError;
}

}  // namespace harary::cli
