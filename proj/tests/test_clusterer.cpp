#include <doctest.h>

#include "harary/clusterer.hpp"
#include "harary/generators.hpp"
#include "oracles.hpp"

using namespace harary;

namespace {

struct Recorder : RunObserver {
  const SignedGraph* g = nullptr;
  double epsilon = 0.0;
  double last = 0.0;
  int rejects = 0;
  int bad_rejects = 0;
  int bad_commits = 0;

  void on_reject(const ClusterAssignment& before, const ClusterAssignment& after,
                 double loss_before, double loss_after) override {
    ++rejects;
    if (!(before == after) || loss_before != loss_after) ++bad_rejects;
  }
  void on_commit(const SplitTraceEntry& entry) override {
    if (!(last - entry.overall_loss > epsilon)) ++bad_commits;
    last = entry.overall_loss;
  }
};

std::vector<Label> sizes_to_labels(std::initializer_list<int> sizes) {
  std::vector<Label> labels;
  Label l = 0;
  for (const int s : sizes) {
    for (int i = 0; i < s; ++i) labels.push_back(l);
    ++l;
  }
  return labels;
}

}  // namespace

TEST_CASE("initial labels follow connected components") {
  const SignedGraph path(4, {{0, 1, 1}, {1, 2, -1}, {2, 3, 1}});
  CHECK(initial_labels(path).labels()[3] == 0);
  CHECK(initial_labels(path).live_label_count() == 1);

  const SignedGraph parts(5, {{0, 1, 1}, {2, 3, -1}});
  const auto a = initial_labels(parts);
  CHECK(std::vector<Label>(a.labels().begin(), a.labels().end()) ==
        std::vector<Label>{0, 0, 1, 1, 2});
}

TEST_CASE("component selection") {
  ClusterAssignment a(sizes_to_labels({3, 12}));
  CHECK(select_component(a, 2) == Label{1});
  a.mark_processed(1);
  CHECK(select_component(a, 2) == Label{0});
  a.mark_processed(0);
  CHECK_FALSE(select_component(a, 2));

  ClusterAssignment small(sizes_to_labels({2, 2}));
  CHECK_FALSE(select_component(small, 2));
  CHECK(select_component(small, 1) == Label{0});  // ties go to the smaller label
}

TEST_CASE("split then undo restores the assignment bit for bit") {
  ClusterAssignment a(sizes_to_labels({6, 3}));
  a.mark_processed(1);
  const auto snapshot = a;
  auto token = a.split(0, {{0, 2, 4}, {1}, {3, 5}});
  CHECK(a.label_counter() == 5);
  CHECK(a.live_label_count() == 4);
  CHECK(a.label_of(4) == 2);
  CHECK(a.label_of(1) == 3);
  CHECK(select_component(a, 2) == Label{2});
  a.undo(std::move(token));
  CHECK(a == snapshot);

  CHECK_THROWS_AS(a.split(0, {{0, 1, 2}, {3, 4}}), GraphError);
  CHECK_THROWS_AS(a.split(0, {{0, 1, 2}, {3, 4, 6}}), GraphError);
  CHECK_THROWS_AS(a.split(0, {{0, 1, 2}, {3, 4, 4}}), GraphError);
  CHECK(a == snapshot);
}

TEST_CASE("densified labels are ordered by size then first member") {
  const std::vector<Label> raw{7, 3, 3, 9, 7, 3};
  CHECK(densify_labels(raw) == std::vector<Label>{1, 0, 0, 2, 1, 0});
}

TEST_CASE("config validation") {
  Config c;
  CHECK_NOTHROW(c.validate());
  c.alpha = 1.5;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = Config{};
  c.iterations = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = Config{};
  c.gamma = -1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = Config{};
  c.time_limit_s = -2;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("all-positive graph stays in one cluster") {
  const SignedGraph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
  const auto r = run(g, Config{});
  CHECK(r.clusters == 1);
  CHECK(r.split_count == 0);
  CHECK(r.metrics.pos_in == 1.0);
}

TEST_CASE("planted partition is recovered") {
  Rng rng(17);
  const auto g = planted_partition(3, 10, 0.8, 0.3, 0.0, rng);
  Config c;
  c.iterations = 200;
  const auto r = run(g, c);
  CHECK(r.metrics.overall_loss == doctest::Approx(0.0));
  CHECK(r.clusters_ge5 == 3);
}

TEST_CASE("commits improve by more than epsilon and rejects leave no trace") {
  Rng rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = random_signed_graph(10 + trial * 3, 0.15, 0.4, rng);
    Config c;
    c.iterations = 50;
    c.seed = static_cast<std::uint64_t>(trial);
    Recorder rec;
    rec.g = &g;
    rec.epsilon = c.epsilon;
    rec.last = overall_loss(g, initial_labels(g).labels());
    const auto r = run(g, c, &rec);
    CHECK(rec.bad_commits == 0);
    CHECK(rec.bad_rejects == 0);
    CHECK(r.attempts == r.split_count + rec.rejects);
    // Incremental counts must match a full recount.
    CHECK(r.metrics.counts == oracle::counts(g, r.labels));
    if (!r.trace.empty()) CHECK(r.trace.back().overall_loss == doctest::Approx(r.metrics.overall_loss));
    CHECK(r.clusters == r.clusters_ge5 + r.clusters_lt5);
  }
}

TEST_CASE("runs are deterministic across repeats and thread counts") {
  Rng rng(29);
  const auto g = random_signed_graph(50, 0.1, 0.4, rng);
  Config c;
  c.iterations = 100;
  c.threads = 1;
  const auto base = run(g, c);
  CHECK(run(g, c).labels == base.labels);
  c.threads = 3;
  const auto threaded = run(g, c);
  CHECK(threaded.labels == base.labels);
  CHECK(threaded.split_count == base.split_count);
}

TEST_CASE("zero time limit stops before the first split") {
  Rng rng(2);
  const auto g = random_signed_graph(20, 0.3, 0.5, rng);
  Config c;
  c.time_limit_s = 0;
  const auto r = run(g, c);
  CHECK(r.timed_out);
  CHECK(r.split_count == 0);
}
