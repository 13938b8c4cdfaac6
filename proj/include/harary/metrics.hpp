#pragma once

#include <cstdint>
#include <span>

#include "harary/graph.hpp"

namespace harary {

using Label = std::int32_t;
inline constexpr Label kNoLabel = -1;

/// Edge classification of a clustering: sign x (between | within).
struct EdgeCounts {
  std::int64_t pos_between = 0;
  std::int64_t pos_within = 0;
  std::int64_t neg_within = 0;
  std::int64_t neg_between = 0;

  std::int64_t total() const noexcept { return pos_between + pos_within + neg_within + neg_between; }
  std::int64_t positive() const noexcept { return pos_between + pos_within; }
  std::int64_t negative() const noexcept { return neg_within + neg_between; }

  friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
};

/// Fractional forms of the counts.
///
/// An empty edge class contributes no violation: pos_out = 0 without
/// positive edges and neg_in = 0 without negative edges. The complements
/// then read pos_in = 1 and neg_out = 0 (single-cluster display convention).
struct Fractions {
  double pos_out = 0.0;
  double neg_in = 0.0;
  double pos_in = 1.0;
  double neg_out = 0.0;
};

struct MetricsRecord {
  EdgeCounts counts;
  double unhappy_ratio = 0.0;
  double unhappy_score = 0.0;
  double pos_out = 0.0;
  double neg_in = 0.0;
  double pos_in = 1.0;
  double neg_out = 0.0;
  double violating = 0.0;  // pos_out + neg_in
  double alpha = 0.5;
  double beta = 1.0;
  std::int64_t isolated = 0;  // singleton clusters
  std::int64_t vertices = 0;
  double loss = 0.0;          // weighted loss at (alpha, beta)
  double overall_loss = 0.0;  // pos_out + neg_in over the whole graph
};

/// Throws MetricError if `labels` does not cover every vertex.
EdgeCounts edge_counts(const SignedGraph& g, std::span<const Label> labels);

/// (pos_between + neg_within) / total. Throws MetricError on zero edges.
double unhappy_ratio(const EdgeCounts& c);

Fractions fractions(const EdgeCounts& c);

/// pos_out + neg_in.
double unhappy_score(const EdgeCounts& c);

/// beta * (alpha * pos_out + (1 - alpha) * neg_in) + (1 - beta) * v_iso / v_total.
/// Throws ConfigError when alpha or beta leave [0,1] or v_total < 1.
double loss(const EdgeCounts& c, std::int64_t v_iso, std::int64_t v_total, double alpha,
            double beta);

/// pos_out + neg_in of the whole graph under `labels`.
double overall_loss(const SignedGraph& g, std::span<const Label> labels);
double overall_loss(const EdgeCounts& c);

/// Number of labels that own exactly one vertex.
std::int64_t singleton_count(std::span<const Label> labels);

/// Every measure at once. The unhappy ratio is reported as 0 for an edgeless
/// graph instead of throwing.
MetricsRecord evaluate(const SignedGraph& g, std::span<const Label> labels, double alpha = 0.5,
                       double beta = 1.0);

}  // namespace harary
