#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "harary/balance.hpp"
#include "harary/graph.hpp"
#include "harary/metrics.hpp"

namespace harary {

struct Config {
  std::int64_t iterations = 1000;
  double alpha = 0.5;
  double beta = 1.0;
  double epsilon = 1e-8;
  std::int64_t gamma = 2;
  std::int64_t time_limit_s = -1;  // -1: unlimited
  std::uint64_t seed = 42;
  TreeMethod tree_method = TreeMethod::random_bfs;
  int threads = 0;      // 0: OpenMP default
  bool refine = false;  // greedy local flips after each tree sample

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

/// Vertex labels of the hierarchical split plus its bookkeeping: the label
/// counter, per-label members and the processed (frozen) set.
class ClusterAssignment {
 public:
  ClusterAssignment() = default;
  /// Labels must be dense in [0, max]; label_counter becomes max + 1.
  explicit ClusterAssignment(std::vector<Label> labels);

  std::span<const Label> labels() const noexcept { return label_of_; }
  Label label_of(Vertex v) const { return label_of_[static_cast<std::size_t>(v)]; }
  Label label_counter() const noexcept { return counter_; }

  /// Members of a live label, ascending. Empty for retired labels.
  const std::vector<Vertex>& members(Label l) const { return members_.at(static_cast<std::size_t>(l)); }
  std::size_t live_label_count() const noexcept { return live_; }

  bool is_processed(Label l) const;
  void mark_processed(Label l);
  std::span<const Label> processed() const noexcept { return processed_order_; }

  /// Largest live label that is not processed and has more than `gamma`
  /// members; ties go to the smaller label id.
  std::optional<Label> largest_eligible(std::int64_t gamma) const;

  /// State needed to revert a split exactly.
  struct SplitToken {
    Label parent = kNoLabel;
    Label counter_before = 0;
    std::vector<Vertex> parent_members;
  };

  /// Retires `parent` and gives each part a fresh label from the counter.
  /// Parts must partition the parent's members.
  SplitToken split(Label parent, const std::vector<std::vector<Vertex>>& parts);
  void undo(SplitToken token);

  friend bool operator==(const ClusterAssignment& a, const ClusterAssignment& b) {
    return a.label_of_ == b.label_of_ && a.counter_ == b.counter_ && a.members_ == b.members_ &&
           a.processed_ == b.processed_ && a.by_size_ == b.by_size_ && a.live_ == b.live_;
  }

 private:
  void index_label(Label l);
  void unindex_label(Label l);

  std::vector<Label> label_of_;
  Label counter_ = 0;
  std::vector<std::vector<Vertex>> members_;
  std::vector<char> processed_;
  std::vector<Label> processed_order_;
  std::set<std::pair<std::int64_t, Label>> by_size_;  // (-size, label), live and unprocessed
  std::size_t live_ = 0;
};

/// One label per connected component, in order of smallest vertex.
ClusterAssignment initial_labels(const SignedGraph& g);

/// Next label to split, or nullopt when the loop should terminate.
std::optional<Label> select_component(const ClusterAssignment& a, std::int64_t gamma);

struct SplitTraceEntry {
  std::int64_t split = 0;  // 1-based
  Label label = 0;         // label of the component that was split
  std::int64_t size = 0;
  std::int64_t frustration = 0;
  double pos_in = 0.0;
  double neg_out = 0.0;
  double overall_loss = 0.0;
  std::int64_t clusters = 0;
  double elapsed_s = 0.0;
};

struct ClusterResult {
  ClusterAssignment assignment;
  std::vector<SplitTraceEntry> trace;
  /// Final labels densified to 0..C-1, larger clusters first.
  std::vector<Label> labels;
  MetricsRecord metrics;
  std::int64_t clusters = 0;
  std::int64_t clusters_ge5 = 0;
  std::int64_t clusters_lt5 = 0;
  std::int64_t split_count = 0;
  std::int64_t attempts = 0;  // committed + rejected
  bool timed_out = false;
  double elapsed_s = 0.0;
};

/// Observer hooks for tests and tracing; all optional.
struct RunObserver {
  /// Called after a rejected split was undone, with the state before the
  /// attempt and after the undo.
  virtual void on_reject(const ClusterAssignment& before, const ClusterAssignment& after,
                         double loss_before, double loss_after) {
    (void)before, (void)after, (void)loss_before, (void)loss_after;
  }
  virtual void on_commit(const SplitTraceEntry& entry) { (void)entry; }
  virtual ~RunObserver() = default;
};

/// Relabels so that clusters are numbered 0..C-1 by descending size, ties by
/// smallest member.
std::vector<Label> densify_labels(std::span<const Label> labels);

/// Hierarchical Harary splitting until no component is eligible or the time
/// limit is hit. Deterministic for a fixed config, independent of threads.
ClusterResult run(const SignedGraph& g, const Config& config, RunObserver* observer = nullptr);

}  // namespace harary
