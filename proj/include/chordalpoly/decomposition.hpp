#pragma once

#include <map>
#include <optional>
#include <vector>

#include "chordalpoly/extended_vector.hpp"
#include "chordalpoly/graph.hpp"
#include "chordalpoly/subgraph_enum.hpp"

namespace chordalpoly {

/// Multiset of vertex sets with positive integer coefficients; the output of
/// a Hilbert-basis decomposition. Keys are sorted vertex sets.
struct Combination {
    std::map<std::vector<int>, Integer> entries;

    void add(const std::vector<int>& support, const Integer& lambda);

    Integer coefficient_total() const;
};

ExtendedVector combination_sum(const Graph& g, const Combination& c);

struct SpliceResult {
    bool adjacent = false;        // the two attachment neighbors are adjacent
    std::vector<int> spliced;     // union vertex set when not adjacent
};

/// The reorganization dichotomy for chordal graphs: P1 and P2 are induced
/// paths both ending at u with distinct attachment neighbors u1 != u2;
/// either u1u2 is an edge, or P1 + P2 induces a path. The spliced union is
/// re-verified; a third outcome on a chordal graph is a bug and throws.
SpliceResult splice_paths(const Graph& g, const std::vector<int>& P1, const std::vector<int>& P2,
                          int u);

/// How a path relates to the closed neighborhood of the working simplicial
/// vertex v, classified per neighbor u of v.
struct NeighborBuckets {
    // u is an extremity and the path meets N[v] only in u.
    std::vector<std::vector<int>> end_only;
    // u is an extremity and the path contains one other vertex of N(v).
    std::vector<std::vector<int>> end_two;
    // u is interior and the path contains one other vertex of N(v).
    std::vector<std::vector<int>> interior_two;
    // u is interior and the path meets N(v) only in u (and misses v).
    std::vector<std::vector<int>> interior_only;
    // the path contains the edge uv (v is then an extremity).
    std::vector<std::vector<int>> through_v;
    // everything else.
    std::vector<std::vector<int>> rest;

    // Vertices of N(v) \ {u} covered by end_two paths.
    std::vector<int> covered;
};

struct DecompositionState {
    int vertex = -1;                        // the simplicial vertex v
    std::map<int, NeighborBuckets> buckets; // per u in N(v)
    std::map<int, Integer> gaps;            // per edge index in delta(v)
};

/// Classification of a combination's supports against a simplicial vertex.
/// Gap values are only filled by the decomposition driver.
DecompositionState classify_buckets(const Graph& g, int v, const Combination& psi);

/// Constructive Hilbert-basis decomposition: writes an integral point of the
/// induced tree (path) cone of a chordal graph as a nonnegative integer
/// combination of induced tree (path) incidence vectors. Processes a PEO
/// front to back; per simplicial vertex, closes the gap on each incident
/// edge by the tree shift move or the path move ladder, then accounts the
/// leftover vertex mass to the singleton. Every move preserves the partial
/// sums off the working edge, which is re-checked after each application.
Combination decompose(SubgraphKind kind, const Graph& g, const ExtendedVector& p);

/// Exhaustive decomposer over enumerate_induced with memoized residuals.
/// Ground truth at enumeration scale; nothing when no combination exists.
std::optional<Combination> oracle_decompose(SubgraphKind kind, const Graph& g,
                                            const ExtendedVector& p);

/// True iff every support is an induced subgraph of the right kind, all
/// coefficients are positive integers, and the weighted sum equals p.
bool verify_combination(const Graph& g, SubgraphKind kind, const Combination& c,
                        const ExtendedVector& p);

}  // namespace chordalpoly
