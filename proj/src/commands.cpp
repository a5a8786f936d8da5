#include "chordalpoly/commands.hpp"

#include <sstream>

#include "chordalpoly/chordal.hpp"
#include "chordalpoly/decomposition.hpp"
#include "chordalpoly/io.hpp"
#include "chordalpoly/polyhedra.hpp"
#include "chordalpoly/solve.hpp"
#include "chordalpoly/verify.hpp"

namespace chordalpoly {

namespace {

std::string show_set(const std::vector<int>& verts) {
    std::string s = "{";
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(verts[i] + 1);
    }
    return s + "}";
}

std::string show_verts(const std::vector<int>& verts) {
    std::string s;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(verts[i] + 1);
    }
    return s;
}

Graph load_graph(const std::string& path, Report& report) {
    std::string content = read_file(path);
    report.lines.push_back("input: " + path + " (digest " + digest(content) + ")");
    return parse_graph(content);
}

// Point rendering in the weights/point file shape.
std::vector<std::string> render_point(const Graph& g, const ExtendedVector& ev) {
    std::vector<std::string> lines;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (ev.x[v] != 0)
            lines.push_back("v " + std::to_string(v + 1) + " " + rational_to_string(ev.x[v]));
    for (int e = 0; e < g.num_edges(); ++e)
        if (ev.y[e] != 0)
            lines.push_back("e " + std::to_string(g.edge(e).first + 1) + " " +
                            std::to_string(g.edge(e).second + 1) + " " +
                            rational_to_string(ev.y[e]));
    return lines;
}

void require_chordal(const Graph& g) {
    if (is_chordal(g)) return;
    std::string what = "input graph is not chordal; the systems are exact only for chordal "
                       "graphs.\nA point of both systems outside the 0/1 box:\n";
    auto witness = non_binary_witness(g);
    for (const auto& line : render_point(g, *witness)) what += "  " + line + "\n";
    throw NonChordalInput(what);
}

std::string combination_text(const Combination& c) {
    std::ostringstream out;
    for (const auto& [support, lambda] : c.entries)
        out << lambda.get_str() << " : " << show_verts(support) << "\n";
    return out.str();
}

}  // namespace

std::string Report::text() const {
    std::ostringstream out;
    out << "command: " << command << "\n";
    for (const auto& line : lines) out << line << "\n";
    for (const auto& warning : warnings) out << "warning: " << warning << "\n";
    return out.str();
}

Report cmd_check(const std::string& graph_path) {
    Report report;
    report.command = "check";
    Graph g = load_graph(graph_path, report);
    report.lines.push_back("vertices: " + std::to_string(g.num_vertices()) +
                           "  edges: " + std::to_string(g.num_edges()));
    auto mcs = mcs_order(g);
    if (mcs.chordal) {
        report.lines.push_back("chordal: yes");
        report.lines.push_back("peo: " + show_verts(mcs.order.order));
        std::string cliques;
        for (const auto& c : maximal_cliques(g, mcs.order)) {
            if (!cliques.empty()) cliques += " ";
            cliques += show_set(c.verts);
        }
        report.lines.push_back("maximal-cliques: " + cliques);
    } else {
        report.lines.push_back("chordal: no");
        auto hole = find_hole(g);
        report.lines.push_back("hole: " + show_verts(*hole));
    }
    return report;
}

Report cmd_system(SubgraphKind kind, const std::string& graph_path, bool all_cliques,
                  bool polytope, const std::string& out_path) {
    Report report;
    report.command = "system";
    Graph g = load_graph(graph_path, report);
    require_chordal(g);
    if (kind == SubgraphKind::Tree && all_cliques)
        report.warnings.push_back("--all-cliques has no effect for tree systems");
    LinearSystem sys =
        kind == SubgraphKind::Tree
            ? tree_system(g, polytope)
            : path_system(g, all_cliques ? CliqueMode::All : CliqueMode::Orbits, polytope);
    report.lines.push_back("kind: " + std::string(kind_name(kind)) +
                           (kind == SubgraphKind::Path
                                ? std::string(" (") + (all_cliques ? "all cliques" : "orbits") + ")"
                                : ""));
    report.lines.push_back("rows: " + std::to_string(sys.rows().size()) +
                           (polytope ? " (polytope: hyperplane included)" : " (cone)"));
    std::string text = to_lp_text(sys);
    if (out_path.empty()) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) report.lines.push_back(line);
    } else {
        write_file(out_path, text);
        report.lines.push_back("written: " + out_path);
    }
    return report;
}

Report cmd_solve(SubgraphKind kind, const std::string& graph_path,
                 const std::string& weights_path) {
    Report report;
    report.command = "solve";
    Graph g = load_graph(graph_path, report);
    std::string wtext = read_file(weights_path);
    report.lines.push_back("weights: " + weights_path + " (digest " + digest(wtext) + ")");
    ExtendedVector weights = parse_weights(wtext, g);
    require_chordal(g);
    SolveResult res = max_weight_subgraph(kind, g, weights);
    report.lines.push_back("kind: " + std::string(kind_name(kind)));
    report.lines.push_back("value: " + rational_to_string(res.value));
    report.lines.push_back("set: " + show_verts(res.verts));
    // Independent recomputation of the value from the weight file.
    Rational recomputed(0);
    for (int v : res.verts) recomputed += weights.x[v];
    for (std::size_t i = 0; i < res.verts.size(); ++i)
        for (std::size_t j = i + 1; j < res.verts.size(); ++j) {
            int e = g.edge_index(res.verts[i], res.verts[j]);
            if (e != -1) recomputed += weights.y[e];
        }
    bool shape_ok = is_induced(kind, g, res.verts);
    if (recomputed != res.value || !shape_ok)
        throw TheoryViolation("solve verification failed on recomputation");
    report.lines.push_back("verified: induced " + std::string(kind_name(kind)) +
                           ", value recomputed from weights exactly");
    report.lines.push_back("simplex-iterations: " + std::to_string(res.iterations));
    return report;
}

Report cmd_facets(const std::string& graph_path) {
    Report report;
    report.command = "facets";
    Graph g = load_graph(graph_path, report);
    require_chordal(g);
    int n = g.num_vertices();
    long total = 0;
    for (int w = 0; w < n; ++w) {
        for (const auto& oc : orbit_cliques(g, w)) {
            ++total;
            std::vector<int> c;
            for (int z : oc.closure)
                if (z != oc.w && !std::binary_search(oc.clique.begin(), oc.clique.end(), z))
                    c.push_back(z);
            std::string facet = oc.facet ? (oc.vacuous ? "yes (vacuous)" : "yes") : "no";
            report.lines.push_back("w=" + std::to_string(w + 1) + " K=" + show_set(oc.clique) +
                                   " C=" + show_set(c) + " orbit=yes facet=" + facet);
        }
    }
    report.lines.push_back("orbit-defining cliques: " + std::to_string(total) +
                           " (bound 2n^2 = " + std::to_string(2 * n * n) + ")");
    if (total > 2L * n * n) throw TheoryViolation("orbit count exceeded 2n^2");
    return report;
}

Report cmd_decompose(SubgraphKind kind, const std::string& graph_path,
                     const std::string& point_path) {
    Report report;
    report.command = "decompose";
    Graph g = load_graph(graph_path, report);
    std::string ptext = read_file(point_path);
    report.lines.push_back("point: " + point_path + " (digest " + digest(ptext) + ")");
    ExtendedVector p = parse_point(ptext, g);
    require_chordal(g);
    Combination c = decompose(kind, g, p);
    if (!verify_combination(g, kind, c, p))
        throw TheoryViolation("decomposition failed re-verification before printing");
    report.lines.push_back("kind: " + std::string(kind_name(kind)));
    report.lines.push_back("supports: " + std::to_string(c.entries.size()) +
                           "  total coefficient: " + c.coefficient_total().get_str());
    std::istringstream in(combination_text(c));
    std::string line;
    while (std::getline(in, line)) report.lines.push_back(line);
    return report;
}

Report cmd_verify(const std::string& suite, int n_max, long trials, std::uint64_t seed) {
    Report report;
    report.command = "verify";
    report.lines.push_back("seed: " + std::to_string(seed));
    std::vector<std::string> todo;
    if (suite == "all")
        todo = suite_names();
    else
        todo.push_back(suite);
    bool all_passed = true;
    for (const auto& name : todo) {
        SuiteResult res = run_suite(name, n_max, trials, seed);
        report.lines.push_back("suite " + res.name + ": " + (res.passed ? "pass" : "FAIL") + " (" +
                               std::to_string(res.checks) + " checks)");
        for (const auto& note : res.notes) report.lines.push_back("  note: " + note);
        for (const auto& failure : res.failures) report.lines.push_back("  failure: " + failure);
        all_passed = all_passed && res.passed;
    }
    if (!all_passed) report.exit_code = 3;
    return report;
}

}  // namespace chordalpoly
