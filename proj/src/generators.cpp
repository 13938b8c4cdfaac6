#include "harary/generators.hpp"

#include <random>

namespace harary {

namespace {

bool is_connected(const SignedGraph& g) {
  return g.vertex_count() > 0 && connected_components(g).size() == 1;
}

}  // namespace

SignedGraph random_signed_graph(Vertex n, double p_edge, double p_negative, Rng& rng,
                                bool connected) {
  if (n < 1) throw GraphError("random graph needs at least one vertex");
  std::bernoulli_distribution has_edge(p_edge);
  std::bernoulli_distribution negative(p_negative);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<SignedEdge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (has_edge(rng)) edges.push_back({u, v, negative(rng) ? Sign{-1} : Sign{1}});
      }
    }
    SignedGraph g(n, std::move(edges));
    if (!connected || is_connected(g)) return g;
  }
  throw GraphError("could not sample a connected graph");
}

SignedGraph random_balanced_graph(Vertex n, double p_edge, Rng& rng, int components) {
  if (components < 1 || n < components) throw GraphError("invalid component count");
  std::vector<SignedEdge> edges;
  Vertex offset = 0;
  for (int c = 0; c < components; ++c) {
    const Vertex size = n / components + (c < n % components ? 1 : 0);
    const auto block = random_signed_graph(size, p_edge, 0.0, rng, true);
    for (const auto& e : block.edges()) edges.push_back({e.u + offset, e.v + offset, 1});
    offset += size;
  }
  SwitchingFunction sigma;
  std::bernoulli_distribution flip(0.5);
  for (Vertex v = 0; v < n; ++v) sigma.sigma.push_back(flip(rng) ? Sign{-1} : Sign{1});
  return switch_signs(SignedGraph(n, std::move(edges)), sigma);
}

SignedGraph planted_partition(int blocks, Vertex block_size, double p_in, double p_out,
                              double noise, Rng& rng) {
  if (blocks < 1 || block_size < 1) throw GraphError("invalid planted partition shape");
  const Vertex n = blocks * block_size;
  std::bernoulli_distribution in_edge(p_in);
  std::bernoulli_distribution out_edge(p_out);
  std::bernoulli_distribution flipped(noise);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<SignedEdge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const bool same = u / block_size == v / block_size;
        if (!(same ? in_edge(rng) : out_edge(rng))) continue;
        Sign s = same ? Sign{1} : Sign{-1};
        if (flipped(rng)) s = static_cast<Sign>(-s);
        edges.push_back({u, v, s});
      }
    }
    SignedGraph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw GraphError("could not sample a connected planted partition");
}

}  // namespace harary
