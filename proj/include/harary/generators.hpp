#pragma once

#include <cstdint>
#include <vector>

#include "harary/balance.hpp"
#include "harary/graph.hpp"

namespace harary {

/// G(n, p) with each edge negative with probability `p_negative`.
/// With `connected` set, resamples until the graph is connected.
SignedGraph random_signed_graph(Vertex n, double p_edge, double p_negative, Rng& rng,
                                bool connected = false);

/// Random graph that is balanced by construction: a random switching of an
/// all-positive G(n, p) graph. `components` > 1 builds that many disjoint
/// connected blocks.
SignedGraph random_balanced_graph(Vertex n, double p_edge, Rng& rng, int components = 1);

/// Planted partition: `blocks` groups of `block_size` vertices, intra-block
/// edges with probability p_in (positive unless flipped with `noise`),
/// inter-block edges with probability p_out (negative unless flipped).
/// Resamples until connected.
SignedGraph planted_partition(int blocks, Vertex block_size, double p_in, double p_out,
                              double noise, Rng& rng);

}  // namespace harary
