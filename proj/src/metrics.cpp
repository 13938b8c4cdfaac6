#include "harary/metrics.hpp"

#include <string>
#include <unordered_map>

namespace harary {

EdgeCounts edge_counts(const SignedGraph& g, std::span<const Label> labels) {
  if (labels.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw MetricError("label count " + std::to_string(labels.size()) + " does not match " +
                      std::to_string(g.vertex_count()) + " vertices");
  }
  EdgeCounts c;
  for (const auto& e : g.edges()) {
    const Label a = labels[static_cast<std::size_t>(e.u)];
    const Label b = labels[static_cast<std::size_t>(e.v)];
    if (a == kNoLabel || b == kNoLabel) {
      throw MetricError("vertex " + std::to_string(a == kNoLabel ? e.u : e.v) + " has no label");
    }
    const bool within = a == b;
    if (e.sign > 0) {
      ++(within ? c.pos_within : c.pos_between);
    } else {
      ++(within ? c.neg_within : c.neg_between);
    }
  }
  return c;
}

double unhappy_ratio(const EdgeCounts& c) {
  if (c.total() == 0) throw MetricError("unhappy ratio of an edgeless graph");
  return static_cast<double>(c.pos_between + c.neg_within) / static_cast<double>(c.total());
}

Fractions fractions(const EdgeCounts& c) {
  Fractions f;
  if (c.positive() > 0) {
    f.pos_out = static_cast<double>(c.pos_between) / static_cast<double>(c.positive());
    f.pos_in = static_cast<double>(c.pos_within) / static_cast<double>(c.positive());
  }
  if (c.negative() > 0) {
    f.neg_in = static_cast<double>(c.neg_within) / static_cast<double>(c.negative());
    f.neg_out = static_cast<double>(c.neg_between) / static_cast<double>(c.negative());
  }
  return f;
}

double unhappy_score(const EdgeCounts& c) {
  const auto f = fractions(c);
  return f.pos_out + f.neg_in;
}

double loss(const EdgeCounts& c, std::int64_t v_iso, std::int64_t v_total, double alpha,
            double beta) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0,1]");
  if (!(beta >= 0.0 && beta <= 1.0)) throw ConfigError("beta must lie in [0,1]");
  if (v_total < 1) throw ConfigError("vertex total must be positive");
  if (v_iso < 0 || v_iso > v_total) throw ConfigError("isolated count out of range");
  const auto f = fractions(c);
  return beta * (alpha * f.pos_out + (1.0 - alpha) * f.neg_in) +
         (1.0 - beta) * static_cast<double>(v_iso) / static_cast<double>(v_total);
}

double overall_loss(const EdgeCounts& c) { return unhappy_score(c); }

double overall_loss(const SignedGraph& g, std::span<const Label> labels) {
  return overall_loss(edge_counts(g, labels));
}

std::int64_t singleton_count(std::span<const Label> labels) {
  std::unordered_map<Label, std::int64_t> sizes;
  for (const Label l : labels) ++sizes[l];
  std::int64_t n = 0;
  for (const auto& [l, s] : sizes) n += s == 1 ? 1 : 0;
  return n;
}

MetricsRecord evaluate(const SignedGraph& g, std::span<const Label> labels, double alpha,
                       double beta) {
  MetricsRecord r;
  r.counts = edge_counts(g, labels);
  r.unhappy_ratio = r.counts.total() > 0 ? unhappy_ratio(r.counts) : 0.0;
  const auto f = fractions(r.counts);
  r.pos_out = f.pos_out;
  r.neg_in = f.neg_in;
  r.pos_in = f.pos_in;
  r.neg_out = f.neg_out;
  r.unhappy_score = f.pos_out + f.neg_in;
  r.violating = r.unhappy_score;
  r.alpha = alpha;
  r.beta = beta;
  r.isolated = singleton_count(labels);
  r.vertices = static_cast<std::int64_t>(labels.size());
  r.loss = loss(r.counts, r.isolated, std::max<std::int64_t>(r.vertices, 1), alpha, beta);
  r.overall_loss = overall_loss(r.counts);
  return r;
}

}  // namespace harary
