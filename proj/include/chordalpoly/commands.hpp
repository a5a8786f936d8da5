#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chordalpoly/subgraph_enum.hpp"

namespace chordalpoly {

/// Deterministic text report of one CLI command. exit_code: 0 success,
/// 2 input error, 3 theory-violation assertion.
struct Report {
    std::string command;
    std::vector<std::string> lines;
    std::vector<std::string> warnings;
    int exit_code = 0;

    std::string text() const;
};

Report cmd_check(const std::string& graph_path);
Report cmd_system(SubgraphKind kind, const std::string& graph_path, bool all_cliques,
                  bool polytope, const std::string& out_path);
Report cmd_solve(SubgraphKind kind, const std::string& graph_path,
                 const std::string& weights_path);
Report cmd_facets(const std::string& graph_path);
Report cmd_decompose(SubgraphKind kind, const std::string& graph_path,
                     const std::string& point_path);
Report cmd_verify(const std::string& suite, int n_max, long trials, std::uint64_t seed);

}  // namespace chordalpoly
