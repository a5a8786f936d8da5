#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "chordalpoly/commands.hpp"
#include "chordalpoly/io.hpp"

using namespace chordalpoly;

#ifndef TEST_DATA_DIR
#define TEST_DATA_DIR "tests/data"
#endif

namespace {

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

bool report_contains(const Report& report, const std::string& needle) {
    return report.text().find(needle) != std::string::npos;
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("/tmp/chordalpoly_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("weights files parse with defaults and validation") {
    Graph g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
    ExtendedVector w = parse_weights("v 1 3/2\ne 1 2 -5\n", g);
    CHECK(w.x[0] == make_rational(3, 2));
    CHECK(w.x[1] == 0);
    CHECK(w.y[0] == -5);
    CHECK(w.y[1] == 0);
    CHECK_THROWS_AS(parse_weights("e 1 3 1\n", g), ParseError);  // unknown edge
    CHECK_THROWS_AS(parse_weights("v 9 1\n", g), ParseError);
    CHECK_THROWS_AS(parse_weights("x 1 1\n", g), ParseError);
    CHECK_THROWS_AS(parse_point("v 1 1/2\n", g), ParseError);  // integers only
    CHECK(parse_point("v 3 2\n", g).x[2] == 2);
}

TEST_CASE("cmd_check on the bundled graphs") {
    Report p3 = cmd_check(data("p3.graph"));
    CHECK(p3.exit_code == 0);
    CHECK(report_contains(p3, "chordal: yes"));
    CHECK(report_contains(p3, "maximal-cliques: {1,2} {2,3}"));

    TempFile c4("c4.graph", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    Report res = cmd_check(c4.path);
    CHECK(report_contains(res, "chordal: no"));
    CHECK(report_contains(res, "hole: "));
}

TEST_CASE("cmd_check on the 7-vertex example finds its two big cliques") {
    TempFile fig5("fig5.graph",
                  "p edge 7 17\ne 1 2\ne 2 3\ne 1 3\ne 6 2\ne 6 1\ne 6 3\ne 7 1\ne 7 2\n"
                  "e 7 3\ne 6 7\ne 1 5\ne 1 4\ne 5 4\ne 2 4\ne 2 5\ne 3 4\ne 3 5\n");
    Report res = cmd_check(fig5.path);
    CHECK(report_contains(res, "chordal: yes"));
    CHECK(report_contains(res, "{1,2,3,6,7}"));
    CHECK(report_contains(res, "{1,2,3,4,5}"));
}

TEST_CASE("cmd_system row counts match the worked examples") {
    Report tree = cmd_system(SubgraphKind::Tree, data("p3.graph"), false, true, "");
    CHECK(report_contains(tree, "rows: 10"));

    Report path = cmd_system(SubgraphKind::Path, data("p3.graph"), false, true, "");
    CHECK(report_contains(path, "rows: 11"));

    TempFile c4("c4b.graph", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    CHECK_THROWS_AS(cmd_system(SubgraphKind::Path, c4.path, false, true, ""), NonChordalInput);
    try {
        cmd_system(SubgraphKind::Path, c4.path, false, true, "");
    } catch (const NonChordalInput& e) {
        // The error points at the witness point.
        CHECK(std::string(e.what()).find("v ") != std::string::npos);
    }
}

TEST_CASE("cmd_system writes the export file") {
    TempFile out("sys.lp", "");
    Report res = cmd_system(SubgraphKind::Tree, data("p3.graph"), false, false, out.path);
    CHECK(report_contains(res, "written: "));
    std::string text = read_file(out.path);
    CHECK(text.find("# rows: 9") != std::string::npos);
    CHECK(text.find("TreeClique") != std::string::npos);
}

TEST_CASE("cmd_solve reports value, set, and verification") {
    TempFile weights("p3.weights", "v 1 1\nv 2 1\nv 3 1\ne 1 2 1\ne 2 3 1\n");
    Report res = cmd_solve(SubgraphKind::Path, data("p3.graph"), weights.path);
    CHECK(report_contains(res, "value: 5"));
    CHECK(report_contains(res, "set: 1 2 3"));
    CHECK(report_contains(res, "verified: induced path"));
}

TEST_CASE("cmd_decompose prints the combination lines") {
    TempFile pt("p3.point", "v 1 1\nv 2 1\nv 3 2\ne 1 2 1\n");
    Report res = cmd_decompose(SubgraphKind::Path, data("p3.graph"), pt.path);
    CHECK(report_contains(res, "1 : 1 2"));
    CHECK(report_contains(res, "2 : 3"));

    TempFile bad("k3.point", "v 1 1\nv 2 1\nv 3 1\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
    TempFile k3("k3.graph", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK_THROWS_AS(cmd_decompose(SubgraphKind::Tree, k3.path, bad.path), NotInCone);
}

TEST_CASE("cmd_facets lists orbit cliques with facet status") {
    TempFile fig5("fig5b.graph",
                  "p edge 7 17\ne 1 2\ne 2 3\ne 1 3\ne 6 2\ne 6 1\ne 6 3\ne 7 1\ne 7 2\n"
                  "e 7 3\ne 6 7\ne 1 5\ne 1 4\ne 5 4\ne 2 4\ne 2 5\ne 3 4\ne 3 5\n");
    Report res = cmd_facets(fig5.path);
    CHECK(report_contains(res, "w=1 K={2,3} C={4,5,6,7} orbit=yes facet=no"));

    Report p3 = cmd_facets(data("p3.graph"));
    CHECK(report_contains(p3, "w=2 K={} C={1,3} orbit=yes facet=no"));
    CHECK(report_contains(p3, "w=2 K={1} C={} orbit=yes facet=yes (vacuous)"));
    CHECK(report_contains(p3, "w=2 K={3} C={} orbit=yes facet=yes (vacuous)"));
    CHECK(report_contains(p3, "w=1 K={2} C={} orbit=yes facet=yes (vacuous)"));
    CHECK(report_contains(p3, "w=3 K={2} C={} orbit=yes facet=yes (vacuous)"));
}

TEST_CASE("cmd_verify runs a named suite and reports failures via exit code") {
    Report ok = cmd_verify("contraction", 6, 5, 42);
    CHECK(ok.exit_code == 0);
    CHECK(report_contains(ok, "suite contraction: pass"));
    CHECK(report_contains(ok, "seed: 42"));
    CHECK_THROWS_AS(cmd_verify("no-such-suite", 0, 0, 1), InputError);
}
