#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "harary/errors.hpp"

namespace harary {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using Sign = std::int8_t;

/// Edge as read from a file, before folding and de-duplication.
struct RawEdge {
  std::uint64_t src = 0;
  std::uint64_t dst = 0;
  double weight = 1.0;

  friend bool operator==(const RawEdge&, const RawEdge&) = default;
};

/// Parsed edges plus optional display names. When `names` is empty the raw
/// ids are the original ids; otherwise `names[id]` is the original token.
struct EdgeList {
  std::vector<RawEdge> edges;
  std::vector<std::string> names;
};

struct SignedEdge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  Sign sign = 1;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Adjacency entry: neighbor plus the index of the edge in `edges()`.
struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Immutable undirected signed graph stored in CSR form.
///
/// Edges keep insertion order; each edge appears once in `edges()` and twice
/// in the adjacency index (once per endpoint).
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Validates and indexes `edges`. Throws GraphError on self-loops,
  /// duplicate pairs, signs other than +-1 or out-of-range endpoints.
  /// Endpoints are normalized so that u < v.
  SignedGraph(Vertex vertex_count, std::vector<SignedEdge> edges,
              std::vector<std::string> vertex_names = {});

  Vertex vertex_count() const noexcept { return n_; }
  EdgeId edge_count() const noexcept { return static_cast<EdgeId>(edges_.size()); }

  std::span<const SignedEdge> edges() const noexcept { return edges_; }
  const SignedEdge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const Incidence> neighbors(Vertex v) const noexcept {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return {adjacency_.data() + b, adjacency_.data() + e};
  }

  std::int32_t degree(Vertex v) const noexcept {
    return static_cast<std::int32_t>(offsets_[static_cast<std::size_t>(v) + 1] -
                                     offsets_[static_cast<std::size_t>(v)]);
  }

  /// Original id of a dense vertex (the decimal id when no names were given).
  std::string name(Vertex v) const;
  std::span<const std::string> vertex_names() const noexcept { return names_; }

  EdgeId positive_edge_count() const noexcept { return positive_; }
  EdgeId negative_edge_count() const noexcept { return edge_count() - positive_; }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.names_ == b.names_;
  }

 private:
  Vertex n_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
  std::vector<std::string> names_;
  EdgeId positive_ = 0;
};

/// Folds, de-duplicates and densifies raw edges.
///
/// Self-loops are dropped; weight >= 0 becomes +1 and weight < 0 becomes -1.
/// Same-sign repeats of an unordered pair keep the first occurrence, while a
/// pair seen with both signs is dropped entirely. Dense ids follow the order
/// of first appearance among the kept edges. Throws GraphError when nothing
/// survives.
SignedGraph preprocess(const EdgeList& raw);
SignedGraph preprocess(std::span<const RawEdge> raw);

/// Recovers an EdgeList from a graph (dense ids, names carried over), so that
/// `preprocess(to_edge_list(preprocess(x))) == preprocess(x)`.
EdgeList to_edge_list(const SignedGraph& g);

struct ComponentSet {
  std::vector<std::vector<Vertex>> components;
  std::vector<std::int32_t> component_of;

  std::size_t size() const noexcept { return components.size(); }
};

/// Connected components restricted to the edges accepted by `keep`.
/// Components are numbered in order of their smallest vertex and each
/// component lists its vertices in ascending order.
template <typename KeepEdge>
ComponentSet connected_components(const SignedGraph& g, KeepEdge&& keep) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ComponentSet out;
  out.component_of.assign(n, -1);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (out.component_of[static_cast<std::size_t>(root)] >= 0) continue;
    const auto id = static_cast<std::int32_t>(out.components.size());
    auto& members = out.components.emplace_back();
    out.component_of[static_cast<std::size_t>(root)] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (const auto& inc : g.neighbors(v)) {
        auto& c = out.component_of[static_cast<std::size_t>(inc.neighbor)];
        if (c < 0 && keep(inc.edge, g.edge(inc.edge))) {
          c = id;
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return out;
}

/// All edges kept.
ComponentSet connected_components(const SignedGraph& g);

/// Vertex-induced subgraph carrying the parent's original signs.
struct Subgraph {
  SignedGraph graph;
  std::vector<Vertex> to_parent;  // ascending

  /// Local id of a parent vertex, or -1 if it is not part of the subgraph.
  Vertex to_local(Vertex parent) const;
};

/// Throws GraphError on an empty or out-of-range vertex set. Duplicates in
/// `vertices` are ignored.
Subgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> vertices);

}  // namespace harary
