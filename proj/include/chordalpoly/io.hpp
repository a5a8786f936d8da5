#pragma once

#include <string>

#include "chordalpoly/extended_vector.hpp"
#include "chordalpoly/graph.hpp"

namespace chordalpoly {

/// DIMACS-like graph text: '#' comment lines and blank lines anywhere, then
/// `p edge <n> <m>` followed by m lines `e <u> <v>`, ids 1-based, no loops.
/// Duplicate edge lines collapse to one edge. Errors carry the line number.
Graph parse_graph(const std::string& text);

/// Weights text: lines `v <id> <rational>` and `e <u> <v> <rational>`;
/// anything unmentioned weighs 0. Rationals are `p/q` or integers.
ExtendedVector parse_weights(const std::string& text, const Graph& g);

/// Point text: same shape as weights but with integer values only.
ExtendedVector parse_point(const std::string& text, const Graph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Short stable content digest (FNV-1a, hex) used in reports.
std::string digest(const std::string& content);

}  // namespace chordalpoly
