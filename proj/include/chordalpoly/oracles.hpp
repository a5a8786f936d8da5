#pragma once

#include <cstdint>
#include <vector>

#include "chordalpoly/graph.hpp"
#include "chordalpoly/rng.hpp"

namespace chordalpoly {

// Brute-force ground truth used by the verification suites and tests. These
// deliberately share no code with the production algorithms they check.

// Scans every vertex subset for one inducing a cycle of length >= 4
// (2-regular and connected). Bitmask-based; n <= 25.
bool brute_force_has_hole(const Graph& g);

// Subset scan for cliques, filtered to inclusion-maximal ones. n <= 20.
std::vector<std::vector<int>> brute_force_maximal_cliques(const Graph& g);

// G(n, p) with exact edge probability num/den.
Graph random_graph(int n, Rng& rng, unsigned long num, unsigned long den);

// The graph with edge set read off the bits of `mask` over the C(n,2)
// vertex pairs in lexicographic order; enumerates all labeled graphs.
Graph graph_from_mask(int n, std::uint64_t mask);

Graph cycle_graph(int k);

}  // namespace chordalpoly
