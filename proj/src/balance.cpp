#include "harary/balance.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace harary {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  Vertex find(Vertex v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      auto& p = parent_[static_cast<std::size_t>(v)];
      p = parent_[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }

  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

Vertex random_vertex(const SignedGraph& g, Rng& rng) {
  std::uniform_int_distribution<Vertex> pick(0, g.vertex_count() - 1);
  return pick(rng);
}

// BFS over the edges accepted by `use`, visiting neighbors in the order
// produced by `arrange`. Fills parent links and order.
template <typename UseEdge, typename Arrange>
SpanningTree bfs_tree(const SignedGraph& g, Vertex root, UseEdge&& use, Arrange&& arrange) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  SpanningTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.parent_sign.assign(n, 1);
  t.order.reserve(n);
  t.parent[static_cast<std::size_t>(root)] = root;
  t.order.push_back(root);
  std::vector<Incidence> scratch;
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const Vertex v = t.order[head];
    const auto nb = g.neighbors(v);
    scratch.assign(nb.begin(), nb.end());
    arrange(scratch);
    for (const auto& inc : scratch) {
      auto& p = t.parent[static_cast<std::size_t>(inc.neighbor)];
      if (p >= 0 || !use(inc.edge)) continue;
      p = v;
      t.parent_sign[static_cast<std::size_t>(inc.neighbor)] = g.edge(inc.edge).sign;
      t.order.push_back(inc.neighbor);
    }
  }
  if (t.order.size() != n) throw GraphError("spanning tree requested for a disconnected graph");
  return t;
}

}  // namespace

TreeMethod parse_tree_method(std::string_view name) {
  if (name == "random-bfs") return TreeMethod::random_bfs;
  if (name == "random-kruskal") return TreeMethod::random_kruskal;
  throw ConfigError("unknown tree method '" + std::string(name) + "'");
}

std::string_view to_string(TreeMethod m) {
  return m == TreeMethod::random_bfs ? "random-bfs" : "random-kruskal";
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng iteration_rng(std::uint64_t seed, std::uint64_t iteration) {
  return Rng(mix_seed(seed, iteration));
}

SpanningTree sample_spanning_tree(const SignedGraph& g, TreeMethod method, Rng& rng) {
  if (g.vertex_count() == 0) throw GraphError("spanning tree of an empty graph");
  const Vertex root = random_vertex(g, rng);
  if (method == TreeMethod::random_bfs) {
    return bfs_tree(
        g, root, [](EdgeId) { return true; },
        [&rng](std::vector<Incidence>& nb) { std::shuffle(nb.begin(), nb.end(), rng); });
  }

  // Kruskal on a random permutation is Kruskal under i.i.d. weights.
  std::vector<EdgeId> ids(static_cast<std::size_t>(g.edge_count()));
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<char> in_tree(ids.size(), 0);
  DisjointSets sets(static_cast<std::size_t>(g.vertex_count()));
  Vertex joined = 1;
  for (const EdgeId e : ids) {
    if (joined == g.vertex_count()) break;
    if (sets.unite(g.edge(e).u, g.edge(e).v)) {
      in_tree[static_cast<std::size_t>(e)] = 1;
      ++joined;
    }
  }
  return bfs_tree(
      g, root, [&in_tree](EdgeId e) { return in_tree[static_cast<std::size_t>(e)] != 0; },
      [](std::vector<Incidence>&) {});
}

std::vector<Vertex> SwitchingFunction::plus_side() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < sigma.size(); ++v) {
    if (sigma[v] > 0) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Vertex> SwitchingFunction::minus_side() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < sigma.size(); ++v) {
    if (sigma[v] < 0) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

SwitchingFunction switching_from_tree(const SignedGraph& g, const SpanningTree& t) {
  SwitchingFunction s;
  s.sigma.assign(static_cast<std::size_t>(g.vertex_count()), 1);
  for (const Vertex v : t.order) {
    if (v == t.root) continue;
    const auto i = static_cast<std::size_t>(v);
    s.sigma[i] = static_cast<Sign>(s.sigma[static_cast<std::size_t>(t.parent[i])] * t.parent_sign[i]);
  }
  return s;
}

std::int64_t frustration_of(const SignedGraph& g, const SwitchingFunction& sigma) {
  std::int64_t f = 0;
  for (const auto& e : g.edges()) {
    f += (e.sign != sigma[e.u] * sigma[e.v]) ? 1 : 0;
  }
  return f;
}

BalancedState balanced_state(const SignedGraph& g, SwitchingFunction sigma) {
  if (sigma.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw GraphError("switching function size does not match graph");
  }
  BalancedState s;
  s.frustration = frustration_of(g, sigma);
  s.sigma = std::move(sigma);
  return s;
}

std::optional<SwitchingFunction> is_balanced(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  SwitchingFunction s;
  s.sigma.assign(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (s.sigma[static_cast<std::size_t>(root)] != 0) continue;
    s.sigma[static_cast<std::size_t>(root)] = 1;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (const auto& inc : g.neighbors(v)) {
        const auto want = static_cast<Sign>(s[v] * g.edge(inc.edge).sign);
        auto& got = s.sigma[static_cast<std::size_t>(inc.neighbor)];
        if (got == 0) {
          got = want;
          queue.push_back(inc.neighbor);
        } else if (got != want) {
          return std::nullopt;
        }
      }
    }
  }
  return s;
}

SignedGraph switch_signs(const SignedGraph& g, const SwitchingFunction& sigma) {
  std::vector<SignedEdge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.sign = static_cast<Sign>(sigma[e.u] * e.sign * sigma[e.v]);
  return SignedGraph(g.vertex_count(), std::move(edges),
                     {g.vertex_names().begin(), g.vertex_names().end()});
}

SignedGraph resign_to_state(const SignedGraph& g, const SwitchingFunction& sigma) {
  std::vector<SignedEdge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.sign = static_cast<Sign>(sigma[e.u] * sigma[e.v]);
  return SignedGraph(g.vertex_count(), std::move(edges),
                     {g.vertex_names().begin(), g.vertex_names().end()});
}

FrustrationResult frustration_exhaustive(const SignedGraph& g) {
  const Vertex n = g.vertex_count();
  if (n > kExhaustiveVertexLimit) {
    throw GraphError("exhaustive frustration limited to " + std::to_string(kExhaustiveVertexLimit) +
                     " vertices");
  }
  SwitchingFunction sigma;
  sigma.sigma.assign(static_cast<std::size_t>(n), 1);
  std::int64_t current = g.negative_edge_count();
  FrustrationResult best{current, sigma};
  if (n <= 1) return best;

  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto v = static_cast<Vertex>(std::countr_zero(i) + 1);
    for (const auto& inc : g.neighbors(v)) {
      const bool frustrated = g.edge(inc.edge).sign != sigma[v] * sigma[inc.neighbor];
      current += frustrated ? -1 : 1;
    }
    auto& s = sigma.sigma[static_cast<std::size_t>(v)];
    s = static_cast<Sign>(-s);
    if (current < best.frustration) {
      best.frustration = current;
      best.sigma = sigma;
    }
  }
  return best;
}

void refine_switching(const SignedGraph& g, SwitchingFunction& sigma) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      int delta = 0;
      for (const auto& inc : g.neighbors(v)) {
        delta += g.edge(inc.edge).sign != sigma[v] * sigma[inc.neighbor] ? -1 : 1;
      }
      if (delta < 0) {
        auto& s = sigma.sigma[static_cast<std::size_t>(v)];
        s = static_cast<Sign>(-s);
        improved = true;
      }
    }
  }
}

HararyCutResult harary_cut(const SignedGraph& g, BalancedState state) {
  HararyCutResult cut;
  const auto& sigma = state.sigma;
  cut.components = connected_components(
      g, [&sigma](EdgeId, const SignedEdge& e) { return sigma[e.u] == sigma[e.v]; });
  cut.state = std::move(state);
  return cut;
}

void score_cut(const SignedGraph& g, HararyCutResult& cut, double alpha, double beta) {
  cut.counts = edge_counts(g, cut.components.component_of);
  cut.isolated = 0;
  for (const auto& c : cut.components.components) cut.isolated += c.size() == 1 ? 1 : 0;
  cut.loss = loss(cut.counts, cut.isolated, std::max<std::int64_t>(g.vertex_count(), 1), alpha,
                  beta);
}

bool better_cut(const HararyCutResult& a, const HararyCutResult& b) {
  if (a.loss != b.loss) return a.loss < b.loss;
  if (a.state.frustration != b.state.frustration) return a.state.frustration < b.state.frustration;
  return a.iteration_index < b.iteration_index;
}

HararyCutResult best_harary_cut(const SignedGraph& g, const BestCutOptions& options) {
  if (options.iterations < 1) throw ConfigError("iterations must be at least 1");
  // Validates alpha/beta before any sampling.
  (void)loss(EdgeCounts{}, 0, 1, options.alpha, options.beta);
  // Nothing may throw inside the parallel region.
  if (g.vertex_count() == 0 || connected_components(g).size() != 1) {
    throw GraphError("best Harary cut requires a connected graph");
  }

  auto sample = [&](std::int64_t i) {
    Rng rng = iteration_rng(options.seed, static_cast<std::uint64_t>(i));
    const auto tree = sample_spanning_tree(g, options.method, rng);
    auto sigma = switching_from_tree(g, tree);
    if (options.refine) refine_switching(g, sigma);
    auto cut = harary_cut(g, balanced_state(g, std::move(sigma)));
    cut.iteration_index = i;
    score_cut(g, cut, options.alpha, options.beta);
    return cut;
  };

  std::optional<HararyCutResult> best;
#ifdef _OPENMP
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    std::optional<HararyCutResult> local;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < options.iterations; ++i) {
      auto cut = sample(i);
      if (!local || better_cut(cut, *local)) local = std::move(cut);
    }
#pragma omp critical(harary_best_cut)
    {
      if (local && (!best || better_cut(*local, *best))) best = std::move(local);
    }
  }
#else
  for (std::int64_t i = 0; i < options.iterations; ++i) {
    auto cut = sample(i);
    if (!best || better_cut(cut, *best)) best = std::move(cut);
  }
#endif
  return std::move(*best);
}

}  // namespace harary
