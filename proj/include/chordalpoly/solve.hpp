#pragma once

#include <vector>

#include "chordalpoly/extended_vector.hpp"
#include "chordalpoly/graph.hpp"
#include "chordalpoly/subgraph_enum.hpp"

namespace chordalpoly {

struct SolveResult {
    Rational value = Rational(0);
    std::vector<int> verts;  // support of the optimal vertex, sorted
    ExtendedVector vertex;
    long iterations = 0;
};

/// Maximum-weight induced tree / path on a chordal graph, solved as an exact
/// LP over the corresponding polytope system (orbit mode for paths). The
/// optimum vertex is binary for chordal inputs; this is asserted on every
/// solve, as is the induced-subgraph shape of its support. Throws
/// NonChordalInput otherwise, IntegralityViolation if a non-binary vertex
/// ever comes back (which would refute a theorem).
SolveResult max_weight_subgraph(SubgraphKind kind, const Graph& g, const ExtendedVector& weights);

}  // namespace chordalpoly
