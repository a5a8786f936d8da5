#include <CLI11.hpp>

#include <cstdint>
#include <iostream>

#include "chordalpoly/commands.hpp"
#include "chordalpoly/errors.hpp"
#include "chordalpoly/verify.hpp"

namespace {

chordalpoly::SubgraphKind parse_kind(const std::string& kind) {
    if (kind == "tree") return chordalpoly::SubgraphKind::Tree;
    if (kind == "path") return chordalpoly::SubgraphKind::Path;
    throw chordalpoly::InputError("kind must be 'tree' or 'path', got '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chordalpoly: induced tree and path polyhedra of chordal graphs"};
    app.require_subcommand(1);

    std::string kind, graph_path, weights_path, point_path, out_path, suite = "all";
    bool all_cliques = false, polytope = false;
    int n_max = 0;
    long trials = 0;
    std::uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "chordality, PEO, maximal cliques or a hole");
    check->add_option("graph", graph_path, "graph file")->required();

    auto* system = app.add_subcommand("system", "export the tree/path linear system");
    system->add_option("kind", kind, "tree or path")->required();
    system->add_option("graph", graph_path, "graph file")->required();
    system->add_flag("--all-cliques", all_cliques, "all cliques of each neighborhood (path only)");
    system->add_flag("--polytope", polytope, "include the x(V)-y(E)=1 hyperplane");
    system->add_option("-o,--output", out_path, "write the system to this file");

    auto* solve = app.add_subcommand("solve", "maximum-weight induced tree/path");
    solve->add_option("kind", kind, "tree or path")->required();
    solve->add_option("graph", graph_path, "graph file")->required();
    solve->add_option("weights", weights_path, "weights file")->required();

    auto* facets = app.add_subcommand("facets", "orbit-defining cliques and facet status");
    facets->add_option("graph", graph_path, "graph file")->required();

    auto* decompose = app.add_subcommand("decompose", "integer cone point into incidence vectors");
    decompose->add_option("kind", kind, "tree or path")->required();
    decompose->add_option("graph", graph_path, "graph file")->required();
    decompose->add_option("point", point_path, "point file")->required();

    auto* verify = app.add_subcommand("verify", "run a property suite");
    std::string suite_help = "suite name or 'all':";
    for (const auto& name : chordalpoly::suite_names()) suite_help += " " + name;
    verify->add_option("--suite", suite, suite_help);
    verify->add_option("--n", n_max, "max vertex count (0: suite default)");
    verify->add_option("--trials", trials, "trial count (0: suite default)");
    verify->add_option("--seed", seed, "master seed");

    CLI11_PARSE(app, argc, argv);

    try {
        chordalpoly::Report report;
        if (check->parsed()) {
            report = chordalpoly::cmd_check(graph_path);
        } else if (system->parsed()) {
            report = chordalpoly::cmd_system(parse_kind(kind), graph_path, all_cliques, polytope,
                                             out_path);
        } else if (solve->parsed()) {
            report = chordalpoly::cmd_solve(parse_kind(kind), graph_path, weights_path);
        } else if (facets->parsed()) {
            report = chordalpoly::cmd_facets(graph_path);
        } else if (decompose->parsed()) {
            report = chordalpoly::cmd_decompose(parse_kind(kind), graph_path, point_path);
        } else if (verify->parsed()) {
            report = chordalpoly::cmd_verify(suite, n_max, trials, seed);
        }
        std::cout << report.text();
        return report.exit_code;
    } catch (const chordalpoly::TheoryViolation& e) {
        std::cerr << "theory violation (this is a bug, please report): " << e.what() << "\n";
        return 3;
    } catch (const chordalpoly::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
