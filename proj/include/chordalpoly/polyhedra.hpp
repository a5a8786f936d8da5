#pragma once

#include <optional>
#include <vector>

#include "chordalpoly/extended_vector.hpp"
#include "chordalpoly/graph.hpp"
#include "chordalpoly/linear_system.hpp"

namespace chordalpoly {

/// Tree cone rows: for every vertex v and every maximal clique K containing
/// v, sum_{u in K\{v}} y_uv - x_v <= 0; plus nonnegativity rows, plus the
/// x(V) - y(E) = 1 hyperplane when requested. Exact for chordal graphs; the
/// builder itself accepts any graph (maximal cliques fall back to a generic
/// enumeration when no PEO exists).
LinearSystem tree_system(const Graph& g, bool with_hyperplane);

enum class CliqueMode { Orbits, All };

/// Path cone rows, kept in the paper-facing scaling
/// y(delta(w, C(K+w))) + 2 y(delta(w, K)) - 2 x_w <= 0: one row per (w, K)
/// with K over the orbit-defining cliques of w (Orbits) or over all cliques
/// of G[N(w)] including the empty one (All; exponential, small graphs only).
/// Duplicate rows are dropped.
LinearSystem path_system(const Graph& g, CliqueMode mode, bool with_hyperplane);

// The single path-cone row for (w, K).
LinearRow path_clique_row(const Graph& g, int w, const std::vector<int>& K);

/// A clique K of N(w) together with its closure K + {w} + C(K + {w}).
/// K is orbit-defining when no strictly larger clique's closure contains its
/// closure; those are the (w,K) pairs whose rows survive domination.
struct OrbitClique {
    int w = -1;
    std::vector<int> clique;   // sorted, may be empty
    std::vector<int> closure;  // sorted
    bool facet = false;        // per the bipartite-component criterion
    bool vacuous = false;      // C(K + {w}) empty: facet holds vacuously
};

/// Orbit-defining cliques of w via the true-twin auxiliary graph: take
/// G[N(w)], add a twin u' per vertex u (adjacent to u and to u's neighbors
/// inside N(w)), make the twin set a clique, and project the maximal cliques
/// back. Requires a chordal graph; at most 2n results per w.
std::vector<OrbitClique> orbit_cliques(const Graph& g, int w);

/// Definition-level oracle: enumerate every clique K of N(w) (including the
/// empty one) and keep those whose closure is not contained in the closure of
/// any strictly larger clique. Intended for small neighborhoods.
std::vector<OrbitClique> orbit_cliques_oracle(const Graph& g, int w);

struct FacetCheck {
    bool facet = false;
    bool vacuous = false;
};

/// Criterion for the row of (w, K) to define a facet of the path polytope:
/// no connected component of the complement of G[C(K + {w})] is bipartite.
/// An empty C(K + {w}) is vacuously facet-defining.
FacetCheck is_facet_defining(const Graph& g, int w, const std::vector<int>& K);

enum class RankStatus { Facet, NotFacet, Improper };

/// Independent facet test by exact affine rank: enumerate all induced-path
/// incidence vectors, compute the affine dimension D of the polytope, and
/// compare against the affine dimension of the vectors tight for (w, K).
/// Facet when the tight set has dimension D-1 (the empty set has dimension
/// -1); Improper flags a row tight on the whole polytope.
RankStatus facet_rank_oracle(const Graph& g, int w, const std::vector<int>& K);

// Core of the oracle against precomputed path vectors and polytope
// dimension, so callers testing many (w, K) pairs on one graph can reuse
// them.
RankStatus facet_rank_status(const Graph& g, const LinearRow& row,
                             const std::vector<ExtendedVector>& path_vectors,
                             long polytope_dim);

/// For a non-chordal graph, the fractional-free certificate that the
/// polytopes are not binary: x = 1 everywhere except 2 on one hole vertex,
/// y = 1 on the hole edges. Satisfies both systems with hyperplane yet
/// leaves the 0/1 box. Returns nothing for chordal inputs.
std::optional<ExtendedVector> non_binary_witness(const Graph& g);

}  // namespace chordalpoly
