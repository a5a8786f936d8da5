#pragma once

#include <optional>
#include <vector>

#include "chordalpoly/graph.hpp"

namespace chordalpoly {

enum class SubgraphKind { Tree, Path };

const char* kind_name(SubgraphKind kind);

/// Whether the nonempty vertex set W induces a tree (connected, |E(W)| =
/// |W|-1) or a path (additionally max degree 2). Empty W is an error: the
/// structures of interest are nonempty.
bool is_induced(SubgraphKind kind, const Graph& g, const std::vector<int>& W);

/// All nonempty induced trees / paths, as sorted vertex sets in
/// lexicographic order. Brute-force oracle layer, intended for small n;
/// warns on stderr when the graph exceeds `warn_above` vertices.
std::vector<std::vector<int>> enumerate_induced(SubgraphKind kind, const Graph& g,
                                                int warn_above = 16);

// Vertex order of the path induced by W, or nothing if W is not an induced
// path. Deterministic: starts at the smaller extremity.
std::optional<std::vector<int>> path_sequence(const Graph& g, const std::vector<int>& W);

}  // namespace chordalpoly
