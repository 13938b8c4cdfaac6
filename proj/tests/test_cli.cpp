#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "harary/cli.hpp"
#include "harary/report.hpp"

namespace fs = std::filesystem;
using harary::cli::run;

namespace {

const fs::path kData = HARARY_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "harary_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string value_of(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.rfind(key + "=", 0) == 0) return token.substr(key.size() + 1);
  }
  std::istringstream lines(text);
  while (std::getline(lines, token)) {
    if (token.rfind(key + "=", 0) == 0) return token.substr(key.size() + 1);
  }
  return {};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"cluster"}).code == 2);
  CHECK(call({"cluster", "--input", (kData / "planted60.tsv").string(), "--alpha", "2"}).code == 2);
  CHECK(call({"cluster", "--input", (kData / "planted60.tsv").string(), "--iterations", "x"}).code == 2);
  CHECK(call({"cluster", "--input", (kData / "planted60.tsv").string(), "--tree-method", "dfs"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("missing or malformed input exits with 1") {
  CHECK(call({"cluster", "--input", "/nonexistent/graph.tsv"}).code == 1);
  const auto bad = scratch("bad.tsv");
  spit(bad, "1 2 1\n1 two 1\n");
  const auto r = call({"cluster", "--input", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("cluster summary matches the labels file") {
  const auto labels = scratch("labels.csv");
  const auto trace = scratch("trace.csv");
  const auto input = (kData / "planted60.tsv").string();
  const auto r = call({"cluster", "--input", input, "--iterations", "200", "--labels",
                       labels.string(), "--trace", trace.string()});
  REQUIRE(r.code == 0);
  CHECK(slurp(trace).rfind(harary::kTraceHeader, 0) == 0);

  const auto m = call({"metrics", "--input", input, "--labels", labels.string()});
  REQUIRE(m.code == 0);
  CHECK(value_of(r.out, "pos_in") == value_of(m.out, "pos_in"));
  CHECK(value_of(r.out, "neg_out") == value_of(m.out, "neg_out"));
  CHECK_FALSE(value_of(m.out, "U").empty());
}

TEST_CASE("manifest replay reproduces labels byte for byte") {
  const auto input = (kData / "planted60.tsv").string();
  const auto manifest = scratch("run.json");
  const auto first = scratch("first.csv");
  const auto second = scratch("second.csv");
  REQUIRE(call({"cluster", "--input", input, "--iterations", "100", "--seed", "7", "--labels",
                first.string(), "--manifest", manifest.string()})
              .code == 0);
  REQUIRE(call({"cluster", "--replay", manifest.string(), "--labels", second.string()}).code == 0);
  CHECK(slurp(first) == slurp(second));

  const auto m = harary::cli::manifest_from_json(slurp(manifest));
  CHECK(m.config.seed == 7);
  CHECK(m.config.iterations == 100);
}

TEST_CASE("metrics command") {
  const auto graph = scratch("tri.tsv");
  spit(graph, "0 1 1\n1 2 1\n0 2 -1\n");
  const auto single = scratch("single.csv");
  spit(single, "vertex,cluster\n0,0\n1,0\n2,0\n");
  const auto r = call({"metrics", "--input", graph.string(), "--labels", single.string()});
  REQUIRE(r.code == 0);
  CHECK(value_of(r.out, "pos_in") == "1.0000");
  CHECK(value_of(r.out, "neg_out") == "0.0000");

  const auto balanced = scratch("bal.tsv");
  spit(balanced, "0 1 1\n1 2 -1\n0 2 -1\n");
  const auto bip = scratch("bip.csv");
  spit(bip, "vertex,cluster\n0,a\n1,a\n2,b\n");
  CHECK(value_of(call({"metrics", "--input", balanced.string(), "--labels", bip.string()}).out, "US") ==
        "0.0000");

  const auto missing = scratch("missing.csv");
  spit(missing, "vertex,cluster\n0,0\n1,0\n");
  CHECK(call({"metrics", "--input", graph.string(), "--labels", missing.string()}).code == 2);
  const auto unknown = scratch("unknown.csv");
  spit(unknown, "vertex,cluster\n0,0\n1,0\n2,0\n9,1\n");
  CHECK(call({"metrics", "--input", graph.string(), "--labels", unknown.string()}).code == 2);
}

TEST_CASE("verify-duality") {
  const auto ok = call({"verify-duality", "--n-max", "4", "--trials", "1"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("0.000000  2.000000  4.000000  4.000000") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  const auto bad = call({"verify-duality", "--inject-unbalanced", "--trials", "2"});
  CHECK(bad.code == 3);
  CHECK(bad.out.find("FAIL isospectral-switching") != std::string::npos);
  CHECK(bad.out.find("0 2 -1") != std::string::npos);
}

TEST_CASE("bench over a directory") {
  const auto r = call({"bench", "--dir", kData.string(), "--iterations", "50", "--sweep",
                       "gamma=2,n/4,n/2"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == harary::kBenchHeader);
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows % 3 == 0);
  CHECK(rows >= 3);

  const auto empty = scratch("empty_dir");
  fs::create_directories(empty);
  for (const auto& e : fs::directory_iterator(empty)) fs::remove(e.path());
  CHECK(call({"bench", "--dir", empty.string()}).code == 2);
  CHECK(call({"bench", "--dir", kData.string(), "--sweep", "gamma"}).code == 2);
}

TEST_CASE("sweep parsing") {
  const auto s = harary::cli::parse_sweep("iterations=10,100,1000");
  CHECK(s.param == "iterations");
  CHECK(s.values == std::vector<std::string>{"10", "100", "1000"});
  harary::Config c;
  harary::cli::apply_parameter(c, "gamma", "n/4", 60);
  CHECK(c.gamma == 15);
  harary::cli::apply_parameter(c, "gamma", "n", 60);
  CHECK(c.gamma == 60);
  CHECK_THROWS_AS(harary::cli::parse_sweep("bogus=1"), harary::ConfigError);
}
