#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "harary/graph.hpp"
#include "harary/metrics.hpp"

namespace harary {

enum class TreeMethod {
  random_bfs,      // BFS from a random root, neighbor order shuffled per vertex
  random_kruskal,  // minimum spanning tree under i.i.d. random edge weights
};

TreeMethod parse_tree_method(std::string_view name);
std::string_view to_string(TreeMethod m);

using Rng = std::mt19937_64;

/// Independent stream for one sampling iteration; depends only on the pair.
Rng iteration_rng(std::uint64_t seed, std::uint64_t iteration);

/// SplitMix64 finalizer, used to derive sub-seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept;

/// Rooted spanning tree. `order` lists vertices parents-first.
struct SpanningTree {
  Vertex root = 0;
  std::vector<Vertex> parent;       // parent[root] == root
  std::vector<Sign> parent_sign;    // sign of the edge to the parent (+1 at root)
  std::vector<Vertex> order;
};

/// Throws GraphError if `g` is empty or disconnected.
SpanningTree sample_spanning_tree(const SignedGraph& g, TreeMethod method, Rng& rng);

/// Per-vertex +-1 potential. U = {v : sigma(v) = +1}, W = {v : sigma(v) = -1}.
struct SwitchingFunction {
  std::vector<Sign> sigma;

  Sign operator[](Vertex v) const { return sigma[static_cast<std::size_t>(v)]; }
  std::size_t size() const noexcept { return sigma.size(); }
  std::vector<Vertex> plus_side() const;
  std::vector<Vertex> minus_side() const;

  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;
};

/// sigma(root) = +1 and sigma(child) = sigma(parent) * parent_sign, so every
/// tree edge satisfies sigma(u) * sigma(v) = sign(u, v).
SwitchingFunction switching_from_tree(const SignedGraph& g, const SpanningTree& t);

struct BalancedState {
  SwitchingFunction sigma;
  std::int64_t frustration = 0;  // edges with sign != sigma(u) * sigma(v)
};

BalancedState balanced_state(const SignedGraph& g, SwitchingFunction sigma);

/// Number of edges whose sign disagrees with sigma(u) * sigma(v).
std::int64_t frustration_of(const SignedGraph& g, const SwitchingFunction& sigma);

/// Witnessing switching function with zero frustration, or nullopt.
std::optional<SwitchingFunction> is_balanced(const SignedGraph& g);

/// Switches `g` by sigma: sign'(u,v) = sigma(u) * sign(u,v) * sigma(v).
SignedGraph switch_signs(const SignedGraph& g, const SwitchingFunction& sigma);

/// The balanced graph of a state: sign'(u,v) = sigma(u) * sigma(v).
SignedGraph resign_to_state(const SignedGraph& g, const SwitchingFunction& sigma);

struct FrustrationResult {
  std::int64_t frustration = 0;
  SwitchingFunction sigma;
};

inline constexpr Vertex kExhaustiveVertexLimit = 24;

/// Exact frustration index by Gray-code enumeration of the 2^(n-1) switching
/// classes (vertex 0 pinned to +1). Throws GraphError for n > 24.
FrustrationResult frustration_exhaustive(const SignedGraph& g);

/// Greedy single-vertex flips while any flip lowers frustration. Off by
/// default in best_harary_cut.
void refine_switching(const SignedGraph& g, SwitchingFunction& sigma);

struct HararyCutResult {
  BalancedState state;
  ComponentSet components;  // of the edges with sigma(u) * sigma(v) = +1
  EdgeCounts counts;        // original signs, labels = components
  std::int64_t isolated = 0;
  double loss = std::numeric_limits<double>::quiet_NaN();
  std::int64_t iteration_index = 0;
};

/// Deletes the edges that are negative in the balanced state; loss is left
/// unset.
HararyCutResult harary_cut(const SignedGraph& g, BalancedState state);

/// Fills counts, isolated and loss of a cut against the original signs of
/// `g`.
void score_cut(const SignedGraph& g, HararyCutResult& cut, double alpha, double beta);

struct BestCutOptions {
  std::int64_t iterations = 1000;
  double alpha = 0.5;
  double beta = 1.0;
  TreeMethod method = TreeMethod::random_bfs;
  std::uint64_t seed = 42;
  int threads = 0;  // 0: OpenMP default
  bool refine = false;
};

/// Orders candidate cuts: lower loss, then lower frustration, then earlier
/// iteration.
bool better_cut(const HararyCutResult& a, const HararyCutResult& b);

/// Samples `iterations` balanced states of a connected graph and returns the
/// cut with the smallest loss. Iteration i draws from iteration_rng(seed, i),
/// so the result does not depend on the thread count.
HararyCutResult best_harary_cut(const SignedGraph& g, const BestCutOptions& options);

}  // namespace harary
