#include <doctest.h>

#include <cmath>
#include <map>

#include "harary/balance.hpp"
#include "harary/generators.hpp"
#include "harary/metrics.hpp"
#include "oracles.hpp"

using namespace harary;

namespace {

SignedGraph triangle_ppn() { return SignedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}}); }

SpanningTree tree_of(Vertex root, std::vector<Vertex> parent, std::vector<Sign> parent_sign,
                     std::vector<Vertex> order) {
  SpanningTree t;
  t.root = root;
  t.parent = std::move(parent);
  t.parent_sign = std::move(parent_sign);
  t.order = std::move(order);
  return t;
}

SwitchingFunction sig(std::vector<Sign> s) { return SwitchingFunction{std::move(s)}; }

}  // namespace

TEST_CASE("switching from a rooted tree") {
  const SignedGraph path_pp(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(switching_from_tree(path_pp, tree_of(0, {0, 0, 1}, {1, 1, 1}, {0, 1, 2})) ==
        sig({1, 1, 1}));

  const SignedGraph path_pn(3, {{0, 1, 1}, {1, 2, -1}});
  CHECK(switching_from_tree(path_pn, tree_of(0, {0, 0, 1}, {1, 1, -1}, {0, 1, 2})) ==
        sig({1, 1, -1}));

  const auto tri = triangle_ppn();
  CHECK(switching_from_tree(tri, tree_of(0, {0, 0, 0}, {1, 1, -1}, {0, 1, 2})) ==
        sig({1, 1, -1}));
}

TEST_CASE("frustration counts sign mismatches") {
  const SignedGraph pos(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  CHECK(frustration_of(pos, sig({1, 1, 1})) == 0);
  const auto tri = triangle_ppn();
  CHECK(frustration_of(tri, sig({1, 1, 1})) == 1);
  CHECK(frustration_of(tri, sig({1, 1, -1})) == 1);
  CHECK(balanced_state(tri, sig({1, 1, -1})).frustration == 1);
}

TEST_CASE("balance test returns a witness or nothing") {
  const SignedGraph pos(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  CHECK(is_balanced(pos) == sig({1, 1, 1}));
  CHECK_FALSE(is_balanced(triangle_ppn()));

  const SignedGraph square(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, -1}, {0, 3, 1}});
  const auto w = is_balanced(square);
  REQUIRE(w);
  CHECK(frustration_of(square, *w) == 0);
}

TEST_CASE("exhaustive frustration on small fixtures") {
  const SignedGraph pos(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(frustration_exhaustive(pos).frustration == 0);
  CHECK(frustration_exhaustive(triangle_ppn()).frustration == 1);

  std::vector<SignedEdge> cycle;
  for (Vertex v = 0; v < 5; ++v) cycle.push_back({v, static_cast<Vertex>((v + 1) % 5), -1});
  const SignedGraph c5(5, cycle);
  const auto r = frustration_exhaustive(c5);
  CHECK(r.frustration == 1);
  CHECK(frustration_of(c5, r.sigma) == 1);
}

TEST_CASE("exhaustive frustration agrees with the brute-force oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_signed_graph(3 + trial % 8, 0.5, 0.5, rng);
    const auto r = frustration_exhaustive(g);
    CHECK(r.frustration == oracle::min_frustration(g));
    CHECK(frustration_of(g, r.sigma) == r.frustration);
  }
  CHECK_THROWS_AS(frustration_exhaustive(random_signed_graph(25, 0.1, 0.5, rng)), GraphError);
}

TEST_CASE("balance witness agrees with the brute-force oracle") {
  Rng rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = random_signed_graph(2 + trial % 9, 0.45, 0.3, rng);
    const auto w = is_balanced(g);
    CHECK(w.has_value() == oracle::balanced(g));
    if (w) CHECK(frustration_of(g, *w) == 0);
  }
}

TEST_CASE("switching preserves frustration") {
  Rng rng(3);
  std::bernoulli_distribution flip(0.5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_signed_graph(9, 0.5, 0.5, rng);
    SwitchingFunction tau, sigma, product;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      tau.sigma.push_back(flip(rng) ? -1 : 1);
      sigma.sigma.push_back(flip(rng) ? -1 : 1);
      product.sigma.push_back(static_cast<Sign>(tau[v] * sigma[v]));
    }
    const auto switched = switch_signs(g, tau);
    CHECK(frustration_of(switched, product) == frustration_of(g, sigma));
    CHECK(frustration_exhaustive(switched).frustration == frustration_exhaustive(g).frustration);
  }
}

TEST_CASE("re-signing to any state yields a balanced graph") {
  Rng rng(8);
  std::bernoulli_distribution flip(0.5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_signed_graph(12, 0.3, 0.5, rng);
    SwitchingFunction sigma;
    for (Vertex v = 0; v < g.vertex_count(); ++v) sigma.sigma.push_back(flip(rng) ? -1 : 1);
    const auto h = resign_to_state(g, sigma);
    const auto w = is_balanced(h);
    REQUIRE(w);
    CHECK(frustration_of(h, sigma) == 0);
  }
}

TEST_CASE("sampled trees span the graph") {
  Rng rng(19);
  for (const auto method : {TreeMethod::random_bfs, TreeMethod::random_kruskal}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto g = random_signed_graph(15, 0.25, 0.5, rng, true);
      const auto t = sample_spanning_tree(g, method, rng);
      REQUIRE(t.parent.size() == static_cast<std::size_t>(g.vertex_count()));
      REQUIRE(t.order.size() == static_cast<std::size_t>(g.vertex_count()));
      CHECK(t.parent[t.root] == t.root);
      std::vector<int> pos(t.order.size());
      for (std::size_t i = 0; i < t.order.size(); ++i) pos[t.order[i]] = static_cast<int>(i);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v == t.root) continue;
        CHECK(pos[t.parent[v]] < pos[v]);
        bool found = false;
        for (const auto& inc : g.neighbors(v)) {
          if (inc.neighbor == t.parent[v]) {
            found = true;
            CHECK(g.edge(inc.edge).sign == t.parent_sign[v]);
          }
        }
        CHECK(found);
      }
      // Tree edges are never frustrated under the tree's own switching.
      const auto s = switching_from_tree(g, t);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v != t.root) CHECK(s[v] * s[t.parent[v]] == t.parent_sign[v]);
      }
    }
  }
  const SignedGraph split(4, {{0, 1, 1}, {2, 3, 1}});
  CHECK_THROWS_AS(sample_spanning_tree(split, TreeMethod::random_bfs, rng), GraphError);
}

TEST_CASE("a tree-shaped input is its own spanning tree") {
  const SignedGraph star(4, {{0, 1, 1}, {0, 2, -1}, {0, 3, 1}});
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto t = sample_spanning_tree(star, TreeMethod::random_kruskal, rng);
    for (Vertex v = 0; v < 4; ++v) {
      if (v == t.root) continue;
      const Vertex a = std::min(v, t.parent[v]);
      const Vertex b = std::max(v, t.parent[v]);
      CHECK(a == 0);
      CHECK(b != 0);
    }
  }
}

TEST_CASE("triangle trees are sampled uniformly") {
  const auto tri = triangle_ppn();
  for (const auto method : {TreeMethod::random_bfs, TreeMethod::random_kruskal}) {
    Rng rng(123);
    std::map<int, int> freq;
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) {
      const auto t = sample_spanning_tree(tri, method, rng);
      // The tree is identified by the edge it leaves out.
      std::vector<int> used(3, 0);
      for (Vertex v = 0; v < 3; ++v) {
        if (v == t.root) continue;
        for (const auto& inc : tri.neighbors(v)) {
          if (inc.neighbor == t.parent[v]) used[inc.edge] = 1;
        }
      }
      REQUIRE(used[0] + used[1] + used[2] == 2);
      const int missing = used[0] == 0 ? 0 : (used[1] == 0 ? 1 : 2);
      ++freq[missing];
    }
    REQUIRE(freq.size() == 3);
    for (const auto& [key, count] : freq) {
      CHECK(std::abs(static_cast<double>(count) / samples - 1.0 / 3.0) <= 0.02);
    }
  }
}

TEST_CASE("harary cut of a triangle") {
  const auto tri = triangle_ppn();
  const auto cut = harary_cut(tri, balanced_state(tri, sig({1, 1, -1})));
  REQUIRE(cut.components.size() == 2);
  CHECK(cut.components.components[0] == std::vector<Vertex>{0, 1});
  CHECK(cut.components.components[1] == std::vector<Vertex>{2});

  const SignedGraph pos(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  CHECK(harary_cut(pos, balanced_state(pos, sig({1, 1, 1}))).components.size() == 1);
}

TEST_CASE("cut frustration equals positive-between plus negative-within") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_signed_graph(20, 0.2, 0.4, rng, true);
    const auto t = sample_spanning_tree(g, TreeMethod::random_bfs, rng);
    auto cut = harary_cut(g, balanced_state(g, switching_from_tree(g, t)));
    score_cut(g, cut, 0.5, 1.0);
    std::vector<Label> labels(cut.components.component_of.begin(), cut.components.component_of.end());
    const auto c = oracle::counts(g, labels);
    CHECK(cut.counts == c);
    CHECK(cut.state.frustration == c.pos_between + c.neg_within);
  }
}

TEST_CASE("best cut minimises the weighted loss") {
  const auto tri = triangle_ppn();
  BestCutOptions opt;
  opt.iterations = 50;
  const auto best = best_harary_cut(tri, opt);
  CHECK(best.loss == doctest::Approx(0.25));
  CHECK(best.components.size() == 2);

  // Scoring the single-component option by hand gives 0.5.
  HararyCutResult single = harary_cut(tri, balanced_state(tri, sig({1, 1, 1})));
  score_cut(tri, single, 0.5, 1.0);
  CHECK(single.components.size() == 1);
  CHECK(single.loss == doctest::Approx(0.5));

  const SignedGraph pos(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  const auto trivial = best_harary_cut(pos, opt);
  CHECK(trivial.loss == 0.0);
  CHECK(trivial.components.size() == 1);
}

TEST_CASE("best cut is independent of the thread count") {
  Rng rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    const auto g = random_signed_graph(40, 0.1, 0.4, rng, true);
    BestCutOptions opt;
    opt.iterations = 200;
    opt.seed = 1000 + trial;
    opt.threads = 1;
    const auto one = best_harary_cut(g, opt);
    opt.threads = 4;
    const auto four = best_harary_cut(g, opt);
    CHECK(one.state.sigma == four.state.sigma);
    CHECK(one.iteration_index == four.iteration_index);
    CHECK(one.loss == four.loss);
  }
}

TEST_CASE("local refinement never increases frustration") {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_signed_graph(25, 0.2, 0.5, rng, true);
    auto s = switching_from_tree(g, sample_spanning_tree(g, TreeMethod::random_bfs, rng));
    const auto before = frustration_of(g, s);
    refine_switching(g, s);
    CHECK(frustration_of(g, s) <= before);
  }
}
