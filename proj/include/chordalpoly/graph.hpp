#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chordalpoly/errors.hpp"

namespace chordalpoly {

/// Simple undirected graph. Vertices are 0-based internally (1-based in all
/// file formats); edges are canonicalized as (min,max) pairs and indexed
/// 0..m-1 in lexicographic order of their endpoint pairs. Immutable after
/// construction, so instances are safe to share read-only across threads.
class Graph {
public:
    Graph() = default;

    // Deduplicates edge pairs; rejects loops and out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edge_pairs);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    // Index into edges(), or -1 when uv is not an edge.
    int edge_index(int u, int v) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& edge(int e) const { return edges_[e]; }

    bool is_clique(const std::vector<int>& verts) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;             // sorted neighbor lists
    std::vector<std::pair<int, int>> edges_;        // sorted (u<v) pairs
};

/// Perfect elimination order candidate: a permutation of the vertices.
struct Peo {
    std::vector<int> order;
};

// Holds iff for each position i the neighbors of order[i] among the later
// vertices are pairwise adjacent.
bool is_valid_peo(const Graph& g, const Peo& peo);

/// Sorted vertex set validated to be pairwise adjacent in a specific graph.
struct Clique {
    std::vector<int> verts;

    Clique() = default;
    Clique(const Graph& g, std::vector<int> v);
};

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // to_parent[i] = vertex id in the parent graph
};

// W must list distinct, in-range vertices. Vertices of the result are
// renumbered 0..|W|-1 in increasing order of their parent ids.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& W);

// Contracts every edge of F; each connected component of (V(F), F) becomes one
// vertex. Parallel edges and loops are dropped. F entries must be edges of g.
Graph contract_edges(const Graph& g, const std::vector<std::pair<int, int>>& F);

// Vertices adjacent to every element of W and not in W. For W = {} this is
// all of V (every vertex is vacuously complete to the empty set).
std::vector<int> complete_to(const Graph& g, const std::vector<int>& W);

}  // namespace chordalpoly
