#include "harary/graph.hpp"

#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace harary {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept {
    std::uint64_t h = p.first * 0x9E3779B97F4A7C15ULL;
    h ^= p.second + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

SignedGraph::SignedGraph(Vertex vertex_count, std::vector<SignedEdge> edges,
                         std::vector<std::string> vertex_names)
    : n_(vertex_count), edges_(std::move(edges)), names_(std::move(vertex_names)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  if (!names_.empty() && names_.size() != static_cast<std::size_t>(n_)) {
    throw GraphError("vertex name count does not match vertex count");
  }
  const auto n = static_cast<std::size_t>(n_);
  std::vector<std::size_t> degree(n, 0);
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> seen;
  seen.reserve(edges_.size());
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw GraphError("edge endpoint out of range");
    }
    if (e.u == e.v) throw GraphError("self-loop on vertex " + std::to_string(e.u));
    if (e.sign != 1 && e.sign != -1) throw GraphError("edge sign must be +1 or -1");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second) {
      throw GraphError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
    if (e.sign > 0) ++positive_;
  }

  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    const auto id = static_cast<EdgeId>(i);
    adjacency_[cursor[static_cast<std::size_t>(e.u)]++] = {e.v, id};
    adjacency_[cursor[static_cast<std::size_t>(e.v)]++] = {e.u, id};
  }
}

std::string SignedGraph::name(Vertex v) const {
  if (names_.empty()) return std::to_string(v);
  return names_[static_cast<std::size_t>(v)];
}

SignedGraph preprocess(std::span<const RawEdge> raw) {
  return preprocess(EdgeList{{raw.begin(), raw.end()}, {}});
}

SignedGraph preprocess(const EdgeList& raw) {
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  auto key_of = [](const RawEdge& e) {
    return Key{std::min(e.src, e.dst), std::max(e.src, e.dst)};
  };
  auto sign_of = [](const RawEdge& e) -> Sign { return e.weight < 0.0 ? -1 : 1; };

  // First pass: which pairs are seen with conflicting signs.
  std::unordered_map<Key, Sign, PairHash> first_sign;
  std::unordered_set<Key, PairHash> inconsistent;
  first_sign.reserve(raw.edges.size());
  for (const auto& e : raw.edges) {
    if (e.src == e.dst) continue;
    const auto [it, fresh] = first_sign.emplace(key_of(e), sign_of(e));
    if (!fresh && it->second != sign_of(e)) inconsistent.insert(it->first);
  }

  // Second pass: keep first occurrence of each consistent pair.
  std::unordered_map<std::uint64_t, Vertex> dense;
  std::vector<std::uint64_t> original;
  std::unordered_set<Key, PairHash> kept;
  std::vector<SignedEdge> edges;
  auto densify = [&](std::uint64_t id) {
    const auto [it, fresh] = dense.emplace(id, static_cast<Vertex>(original.size()));
    if (fresh) original.push_back(id);
    return it->second;
  };
  for (const auto& e : raw.edges) {
    if (e.src == e.dst) continue;
    const Key k = key_of(e);
    if (inconsistent.contains(k) || !kept.insert(k).second) continue;
    const Vertex a = densify(e.src);
    const Vertex b = densify(e.dst);
    edges.push_back({std::min(a, b), std::max(a, b), sign_of(e)});
  }
  if (edges.empty()) throw GraphError("graph is empty after preprocessing");

  std::vector<std::string> names;
  names.reserve(original.size());
  for (const auto id : original) {
    if (raw.names.empty()) {
      names.push_back(std::to_string(id));
    } else {
      if (id >= raw.names.size()) throw GraphError("raw id without a name");
      names.push_back(raw.names[static_cast<std::size_t>(id)]);
    }
  }
  return SignedGraph(static_cast<Vertex>(original.size()), std::move(edges), std::move(names));
}

EdgeList to_edge_list(const SignedGraph& g) {
  EdgeList out;
  out.edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const auto& e : g.edges()) {
    out.edges.push_back({static_cast<std::uint64_t>(e.u), static_cast<std::uint64_t>(e.v),
                         static_cast<double>(e.sign)});
  }
  out.names.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.names.push_back(g.name(v));
  return out;
}

ComponentSet connected_components(const SignedGraph& g) {
  return connected_components(g, [](EdgeId, const SignedEdge&) { return true; });
}

Vertex Subgraph::to_local(Vertex parent) const {
  const auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return -1;
  return static_cast<Vertex>(it - to_parent.begin());
}

Subgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw GraphError("induced subgraph of an empty vertex set");
  Subgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()),
                      sub.to_parent.end());
  if (sub.to_parent.front() < 0 || sub.to_parent.back() >= g.vertex_count()) {
    throw GraphError("induced subgraph vertex out of range");
  }

  // Collect parent edge ids so the subgraph keeps the parent's edge order.
  std::vector<EdgeId> ids;
  for (const Vertex p : sub.to_parent) {
    for (const auto& inc : g.neighbors(p)) {
      if (inc.neighbor > p && sub.to_local(inc.neighbor) >= 0) ids.push_back(inc.edge);
    }
  }
  std::sort(ids.begin(), ids.end());

  std::vector<SignedEdge> edges;
  edges.reserve(ids.size());
  for (const EdgeId id : ids) {
    const auto& e = g.edge(id);
    edges.push_back({sub.to_local(e.u), sub.to_local(e.v), e.sign});
  }
  std::vector<std::string> names;
  if (!g.vertex_names().empty()) {
    names.reserve(sub.to_parent.size());
    for (const Vertex p : sub.to_parent) names.push_back(g.name(p));
  }
  sub.graph = SignedGraph(static_cast<Vertex>(sub.to_parent.size()), std::move(edges),
                          std::move(names));
  return sub;
}

}  // namespace harary
