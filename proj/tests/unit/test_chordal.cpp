#include <doctest.h>

#include <algorithm>
#include <set>

#include "chordalpoly/chordal.hpp"
#include "chordalpoly/oracles.hpp"
#include "chordalpoly/rng.hpp"

using namespace chordalpoly;

namespace {

Graph p3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }
Graph star() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}}); }  // center 2 (1-based)

std::set<std::vector<int>> clique_set(const std::vector<Clique>& cliques) {
    std::set<std::vector<int>> out;
    for (const auto& c : cliques) out.insert(c.verts);
    return out;
}

}  // namespace

TEST_CASE("mcs_order recognizes small graphs") {
    auto res = mcs_order(p3());
    CHECK(res.chordal);
    CHECK(is_valid_peo(p3(), res.order));

    CHECK_FALSE(mcs_order(cycle_graph(4)).chordal);

    Graph single = Graph::from_edges(1, {});
    auto one = mcs_order(single);
    CHECK(one.chordal);
    CHECK(one.order.order == std::vector<int>{0});
}

TEST_CASE("find_hole returns a verified chordless cycle or nothing") {
    auto hole = find_hole(cycle_graph(4));
    REQUIRE(hole.has_value());
    CHECK(hole->size() == 4);

    CHECK_FALSE(find_hole(p3()).has_value());

    // C6 with the long chord 1-4: both halves are 4-holes.
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
    auto h = find_hole(g);
    REQUIRE(h.has_value());
    CHECK(h->size() == 4);
}

TEST_CASE("maximal cliques via PEO match the spec examples") {
    auto p3_cliques = clique_set(maximal_cliques(p3(), mcs_order(p3()).order));
    CHECK(p3_cliques == std::set<std::vector<int>>{{0, 1}, {1, 2}});

    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(clique_set(maximal_cliques(k3, mcs_order(k3).order)) ==
          std::set<std::vector<int>>{{0, 1, 2}});

    auto star_cliques = clique_set(maximal_cliques(star(), mcs_order(star()).order));
    CHECK(star_cliques == std::set<std::vector<int>>{{0, 1}, {1, 2}, {1, 3}});
}

TEST_CASE("maximal cliques reject an invalid PEO") {
    Graph g = star();
    CHECK_THROWS_AS(maximal_cliques(g, {{1, 0, 2, 3}}), InputError);
}

TEST_CASE("PEO-based and generic maximal cliques agree with brute force") {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + static_cast<int>(rng.below(8));
        Graph g = gen_random_chordal(n, make_rational(1, 2), rng.next());
        auto brute = brute_force_maximal_cliques(g);
        auto peo = clique_set(maximal_cliques(g, mcs_order(g).order));
        auto bk = clique_set(maximal_cliques_any(g));
        CHECK(peo == std::set<std::vector<int>>(brute.begin(), brute.end()));
        CHECK(bk == peo);
        CHECK(peo.size() <= static_cast<std::size_t>(n));
    }
}

TEST_CASE("components_bipartite classifies the worked cases") {
    // Complement of the {4,5,6,7} induced subgraph of the 7-vertex example:
    // a 4-cycle, one component, bipartite.
    Graph sub = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto comps = components_bipartite(complement(sub));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].bipartite);

    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    auto tri = components_bipartite(k3);
    REQUIRE(tri.size() == 1);
    CHECK_FALSE(tri[0].bipartite);

    Graph iso = Graph::from_edges(2, {});
    auto two = components_bipartite(iso);
    REQUIRE(two.size() == 2);
    CHECK(two[0].bipartite);
    CHECK(two[1].bipartite);
}

TEST_CASE("gen_random_chordal is chordal, deterministic, and handles edges of the range") {
    CHECK(gen_random_chordal(1, make_rational(1, 2), 9).num_vertices() == 1);
    Graph a = gen_random_chordal(8, make_rational(1, 2), 7);
    Graph b = gen_random_chordal(8, make_rational(1, 2), 7);
    CHECK(a.edges() == b.edges());
    CHECK(mcs_order(a).chordal);
    CHECK(gen_random_chordal(6, Rational(0), 3).num_edges() == 0);
    // Density 1 keeps every graph built this way connected past the anchor.
    Graph full = gen_random_chordal(6, Rational(1), 3);
    CHECK(mcs_order(full).chordal);
    for (int t = 0; t < 50; ++t)
        CHECK(mcs_order(gen_random_chordal(10, make_rational(1, 3), 100 + t)).chordal);
}
