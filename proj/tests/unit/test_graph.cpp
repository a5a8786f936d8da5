#include <doctest.h>

#include <algorithm>

#include "chordalpoly/graph.hpp"
#include "chordalpoly/io.hpp"
#include "chordalpoly/oracles.hpp"
#include "chordalpoly/rng.hpp"

using namespace chordalpoly;

namespace {

Graph p3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }
Graph k3() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

// The 7-vertex example graph: a triangle {1,2,3} complete to {6,7} and to
// {4,5}, plus edges 45 and 67.
Graph fig5() {
    return parse_graph(
        "p edge 7 17\n"
        "e 1 2\ne 2 3\ne 1 3\ne 6 2\ne 6 1\ne 6 3\ne 7 1\ne 7 2\ne 7 3\ne 6 7\n"
        "e 1 5\ne 1 4\ne 5 4\ne 2 4\ne 2 5\ne 3 4\ne 3 5\n");
}

}  // namespace

TEST_CASE("parse_graph reads the header and edge lines") {
    Graph g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("parse_graph accepts comments and collapses duplicate edges") {
    Graph g = parse_graph("# a comment\np edge 3 3\ne 1 2\n# middle\ne 2 1\ne 2 3\n");
    CHECK(g.num_edges() == 2);
}

TEST_CASE("parse_graph rejects bad input with line numbers") {
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1\n"), ParseError);       // loop
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n"), ParseError);       // out of range
    CHECK_THROWS_AS(parse_graph("p foo 2 1\ne 1 2\n"), ParseError);        // malformed header
    CHECK_THROWS_AS(parse_graph("p edge 2 2\ne 1 2\n"), ParseError);       // missing edge line
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    try {
        parse_graph("p edge 2 1\ne 1 1\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("parse_graph reads the worked 7-vertex example") {
    Graph g = fig5();
    CHECK(g.num_vertices() == 7);
    CHECK(g.num_edges() == 17);
    CHECK(g.is_clique({0, 1, 2, 5, 6}));
    CHECK(g.is_clique({0, 1, 2, 3, 4}));
}

TEST_CASE("edge indices are the lexicographic ranks of canonical pairs") {
    Graph g = p3();
    CHECK(g.edge(0) == std::pair<int, int>{0, 1});
    CHECK(g.edge(1) == std::pair<int, int>{1, 2});
    CHECK(g.edge_index(1, 0) == 0);
    CHECK(g.edge_index(0, 2) == -1);
}

TEST_CASE("complement of small graphs") {
    Graph c = complement(p3());
    CHECK(c.num_edges() == 1);
    CHECK(c.has_edge(0, 2));
    CHECK(complement(k3()).num_edges() == 0);
}

TEST_CASE("complement is an involution") {
    Rng rng(42);
    for (int t = 0; t < 20; ++t) {
        int n = 1 + static_cast<int>(rng.below(9));
        Graph g = random_graph(n, rng, 1, 2);
        Graph back = complement(complement(g));
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("induced subgraph of the 7-vertex example on {4,5,6,7}") {
    auto sub = induced_subgraph(fig5(), {3, 4, 5, 6});
    CHECK(sub.graph.num_vertices() == 4);
    CHECK(sub.graph.num_edges() == 2);
    // Edges 45 and 67 survive, nothing else.
    CHECK(sub.graph.has_edge(0, 1));
    CHECK(sub.graph.has_edge(2, 3));
    CHECK(sub.to_parent == std::vector<int>{3, 4, 5, 6});
}

TEST_CASE("induced subgraph edge cases") {
    Graph g = p3();
    CHECK(induced_subgraph(g, {}).graph.num_vertices() == 0);
    auto full = induced_subgraph(g, {0, 1, 2});
    CHECK(full.graph.edges() == g.edges());
    CHECK_THROWS_AS(induced_subgraph(g, {0, 7}), InputError);
}

TEST_CASE("contract_edges merges endpoints and stays simple") {
    Graph a = contract_edges(p3(), {{0, 1}});
    CHECK(a.num_vertices() == 2);
    CHECK(a.num_edges() == 1);
    Graph b = contract_edges(k3(), {{0, 1}});
    CHECK(b.num_vertices() == 2);
    CHECK(b.num_edges() == 1);  // parallel edges merged
    CHECK_THROWS_AS(contract_edges(p3(), {{0, 2}}), InputError);
}

TEST_CASE("complete_to on the worked examples") {
    CHECK(complete_to(fig5(), {0, 1, 2}) == std::vector<int>{3, 4, 5, 6});
    CHECK(complete_to(p3(), {1}) == std::vector<int>{0, 2});
    CHECK(complete_to(p3(), {0, 1}).empty());
    // Every vertex is vacuously complete to the empty set.
    CHECK(complete_to(p3(), {}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("complete_to is antitone in the set") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + static_cast<int>(rng.below(7));
        Graph g = random_graph(n, rng, 1, 2);
        std::vector<int> w2;
        for (int v = 0; v < n; ++v)
            if (rng.bernoulli(1, 3)) w2.push_back(v);
        std::vector<int> w1;
        for (int v : w2)
            if (rng.bernoulli(1, 2)) w1.push_back(v);
        auto c1 = complete_to(g, w1), c2 = complete_to(g, w2);
        for (int v : c2)
            if (!std::count(w1.begin(), w1.end(), v))
                CHECK(std::count(c1.begin(), c1.end(), v));
    }
}

TEST_CASE("clique construction validates pairwise adjacency") {
    CHECK_THROWS_AS(Clique(p3(), {0, 2}), InputError);
    CHECK(Clique(k3(), {0, 1, 2}).verts == std::vector<int>{0, 1, 2});
}

TEST_CASE("peo validity is the later-neighbors-clique condition") {
    Graph g = p3();
    CHECK(is_valid_peo(g, {{0, 2, 1}}));
    CHECK(is_valid_peo(g, {{2, 1, 0}}));
    Graph c4 = cycle_graph(4);
    CHECK_FALSE(is_valid_peo(c4, {{0, 1, 2, 3}}));
    CHECK_FALSE(is_valid_peo(g, {{0, 0, 1}}));  // not a permutation
}
