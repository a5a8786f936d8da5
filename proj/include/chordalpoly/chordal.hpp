#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chordalpoly/graph.hpp"
#include "chordalpoly/rational.hpp"

namespace chordalpoly {

struct McsResult {
    Peo order;
    bool chordal;
};

/// Maximum cardinality search followed by direct validation of the resulting
/// elimination order. The order is a valid PEO exactly when the graph is
/// chordal, which is what the flag reports.
McsResult mcs_order(const Graph& g);

inline bool is_chordal(const Graph& g) { return mcs_order(g).chordal; }

/// Finds a chordless cycle of length >= 4 (in cycle order) if one exists.
/// The returned sequence is re-verified chordless before being handed out.
std::optional<std::vector<int>> find_hole(const Graph& g);

// Inclusion-maximal cliques of a chordal graph, read off the PEO candidates
// N_{G_i}[v_i]. At most n cliques. Throws on an invalid PEO.
std::vector<Clique> maximal_cliques(const Graph& g, const Peo& peo);

// Maximal cliques of an arbitrary graph (Bron-Kerbosch with pivoting).
// Used where chordality is not guaranteed; exponential in the worst case.
std::vector<Clique> maximal_cliques_any(const Graph& g);

struct ComponentInfo {
    std::vector<int> verts;
    bool bipartite;  // isolated vertices count as bipartite
};

std::vector<ComponentInfo> components_bipartite(const Graph& g);

/// Random chordal graph via reverse-PEO insertion: each new vertex attaches
/// to a density-scaled random subset of a randomly chosen existing clique,
/// so the insertion order reversed is a PEO by construction. Deterministic
/// per seed.
Graph gen_random_chordal(int n, const Rational& density, std::uint64_t seed);

}  // namespace chordalpoly
