#include <doctest.h>

#include <set>

#include "chordalpoly/io.hpp"
#include "chordalpoly/oracles.hpp"
#include "chordalpoly/polyhedra.hpp"
#include "chordalpoly/simplex.hpp"
#include "chordalpoly/subgraph_enum.hpp"

using namespace chordalpoly;

namespace {

Graph p3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }
Graph k3() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph k2() { return Graph::from_edges(2, {{0, 1}}); }
Graph star() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}}); }

Graph fig5() {
    return parse_graph(
        "p edge 7 17\n"
        "e 1 2\ne 2 3\ne 1 3\ne 6 2\ne 6 1\ne 6 3\ne 7 1\ne 7 2\ne 7 3\ne 6 7\n"
        "e 1 5\ne 1 4\ne 5 4\ne 2 4\ne 2 5\ne 3 4\ne 3 5\n");
}

bool has_row(const LinearSystem& sys, const std::vector<std::pair<int, Rational>>& coeffs,
             Rel rel, const Rational& rhs) {
    for (const auto& row : sys.rows()) {
        if (row.rel != rel || row.rhs != rhs) continue;
        if (row.coeffs == coeffs) return true;
    }
    return false;
}

std::set<std::vector<int>> orbit_set(const std::vector<OrbitClique>& list) {
    std::set<std::vector<int>> out;
    for (const auto& oc : list) out.insert(oc.clique);
    return out;
}

}  // namespace

TEST_CASE("tree system of P3 has the four clique rows plus nonnegativity") {
    Graph g = p3();
    LinearSystem sys = tree_system(g, false);
    CHECK(sys.rows().size() == 9);
    int n = 3;
    // y12 <= x1, y12 <= x2, y23 <= x2, y23 <= x3 (1-based naming).
    CHECK(has_row(sys, {{0, Rational(-1)}, {n + 0, Rational(1)}}, Rel::LessEq, Rational(0)));
    CHECK(has_row(sys, {{1, Rational(-1)}, {n + 0, Rational(1)}}, Rel::LessEq, Rational(0)));
    CHECK(has_row(sys, {{1, Rational(-1)}, {n + 1, Rational(1)}}, Rel::LessEq, Rational(0)));
    CHECK(has_row(sys, {{2, Rational(-1)}, {n + 1, Rational(1)}}, Rel::LessEq, Rational(0)));
}

TEST_CASE("tree system of K3 couples both incident edges per vertex") {
    LinearSystem sys = tree_system(k3(), false);
    CHECK(sys.rows().size() == 9);  // 3 clique rows + 6 nonneg
    int n = 3;
    CHECK(has_row(sys, {{0, Rational(-1)}, {n + 0, Rational(1)}, {n + 1, Rational(1)}},
                  Rel::LessEq, Rational(0)));
}

TEST_CASE("tree polytope of a single vertex collapses to two rows") {
    Graph g = Graph::from_edges(1, {});
    LinearSystem sys = tree_system(g, true);
    REQUIRE(sys.rows().size() == 2);
    CHECK(has_row(sys, {{0, Rational(-1)}}, Rel::LessEq, Rational(0)));
    CHECK(has_row(sys, {{0, Rational(1)}}, Rel::Eq, Rational(1)));
}

TEST_CASE("path system of P3 in orbit mode has the five worked rows") {
    Graph g = p3();
    LinearSystem sys = path_system(g, CliqueMode::Orbits, true);
    CHECK(sys.rows().size() == 11);  // 5 clique + 5 nonneg + hyperplane
    int n = 3;
    CHECK(has_row(sys, {{1, Rational(-2)}, {n + 0, Rational(1)}, {n + 1, Rational(1)}},
                  Rel::LessEq, Rational(0)));  // y12 + y23 <= 2 x2
    CHECK(has_row(sys, {{1, Rational(-2)}, {n + 0, Rational(2)}}, Rel::LessEq, Rational(0)));
    CHECK(has_row(sys, {{1, Rational(-2)}, {n + 1, Rational(2)}}, Rel::LessEq, Rational(0)));
    CHECK(has_row(sys, {{0, Rational(-2)}, {n + 0, Rational(2)}}, Rel::LessEq, Rational(0)));
    CHECK(has_row(sys, {{2, Rational(-2)}, {n + 1, Rational(2)}}, Rel::LessEq, Rational(0)));
}

TEST_CASE("empty-clique path row of a star center spans all leaf edges") {
    LinearSystem sys = path_system(star(), CliqueMode::All, false);
    int n = 4;
    CHECK(has_row(sys,
                  {{1, Rational(-2)}, {n + 0, Rational(1)}, {n + 1, Rational(1)},
                   {n + 2, Rational(1)}},
                  Rel::LessEq, Rational(0)));
}

TEST_CASE("single edge contributes the doubled row in both directions") {
    LinearSystem sys = path_system(k2(), CliqueMode::Orbits, true);
    CHECK(sys.rows().size() == 6);
    CHECK(has_row(sys, {{0, Rational(-2)}, {2, Rational(2)}}, Rel::LessEq, Rational(0)));
    CHECK(has_row(sys, {{1, Rational(-2)}, {2, Rational(2)}}, Rel::LessEq, Rational(0)));
}

TEST_CASE("orbit cliques of P3 match the hand trace") {
    Graph g = p3();
    CHECK(orbit_set(orbit_cliques(g, 1)) == std::set<std::vector<int>>{{}, {0}, {2}});
    CHECK(orbit_set(orbit_cliques(g, 0)) == std::set<std::vector<int>>{{1}});
    CHECK(orbit_set(orbit_cliques_oracle(g, 1)) == orbit_set(orbit_cliques(g, 1)));
    CHECK(orbit_set(orbit_cliques_oracle(g, 0)) == orbit_set(orbit_cliques(g, 0)));
}

TEST_CASE("orbit cliques of a star center: empty clique plus each leaf") {
    Graph g = star();
    auto got = orbit_set(orbit_cliques(g, 1));
    CHECK(got == std::set<std::vector<int>>{{}, {0}, {2}, {3}});
    CHECK(got == orbit_set(orbit_cliques_oracle(g, 1)));
}

TEST_CASE("an isolated vertex has exactly the empty orbit clique") {
    Graph g = Graph::from_edges(2, {});
    CHECK(orbit_set(orbit_cliques(g, 0)) == std::set<std::vector<int>>{{}});
    CHECK(orbit_set(orbit_cliques_oracle(g, 0)) == std::set<std::vector<int>>{{}});
}

TEST_CASE("the 7-vertex example admits the documented orbit clique") {
    Graph g = fig5();
    auto got = orbit_set(orbit_cliques(g, 0));
    CHECK(got.count({1, 2}) == 1);  // K = {2,3} for w = 1 (1-based)
    CHECK(got == orbit_set(orbit_cliques_oracle(g, 0)));
}

TEST_CASE("facet classification on the worked cases") {
    auto fig = is_facet_defining(fig5(), 0, {1, 2});
    CHECK_FALSE(fig.facet);  // complement on {4,5,6,7} is a bipartite 4-cycle

    auto p3_vacuous = is_facet_defining(p3(), 1, {0});
    CHECK(p3_vacuous.facet);
    CHECK(p3_vacuous.vacuous);
    CHECK_FALSE(is_facet_defining(p3(), 1, {}).facet);

    CHECK_FALSE(is_facet_defining(k2(), 0, {}).facet);
    CHECK(is_facet_defining(k2(), 0, {1}).facet);

    auto k3_case = is_facet_defining(k3(), 0, {1, 2});
    CHECK(k3_case.facet);
    CHECK(k3_case.vacuous);

    CHECK_THROWS_AS(is_facet_defining(p3(), 1, {0, 2}), InputError);  // not a clique
    CHECK_THROWS_AS(is_facet_defining(p3(), 0, {2}), InputError);     // outside N(w)
}

TEST_CASE("facet rank oracle on the worked cases") {
    CHECK(facet_rank_oracle(p3(), 1, {0}) == RankStatus::Facet);
    CHECK(facet_rank_oracle(p3(), 1, {}) == RankStatus::NotFacet);
    CHECK(facet_rank_oracle(k2(), 0, {}) == RankStatus::NotFacet);
    CHECK(facet_rank_oracle(k2(), 0, {1}) == RankStatus::Facet);
    CHECK(facet_rank_oracle(fig5(), 0, {1, 2}) == RankStatus::NotFacet);
    // Degenerate single-vertex polytope: the empty tight face has dimension
    // -1 = dim - 1, agreeing with the vacuous classification.
    Graph single = Graph::from_edges(1, {});
    CHECK(facet_rank_oracle(single, 0, {}) == RankStatus::Facet);
    CHECK(is_facet_defining(single, 0, {}).facet);
}

TEST_CASE("non-binary witness of C4 is the documented point") {
    Graph g = cycle_graph(4);
    auto w = non_binary_witness(g);
    REQUIRE(w.has_value());
    Rational total(0);
    for (const auto& v : w->x) total += v;
    CHECK(total == 5);
    for (const auto& v : w->y) CHECK(v == 1);
    CHECK(w->vertex_sum_minus_edge_sum() == 1);
    bool has_two = false;
    for (const auto& v : w->x) has_two = has_two || v == 2;
    CHECK(has_two);
    CHECK(check_membership(tree_system(g, true), *w).ok);
    CHECK(check_membership(path_system(g, CliqueMode::All, true), *w).ok);
}

TEST_CASE("witness is absent on chordal inputs and robust off spanning holes") {
    CHECK_FALSE(non_binary_witness(p3()).has_value());

    // C5 plus an isolated vertex: the hole does not span V.
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto w = non_binary_witness(g);
    REQUIRE(w.has_value());
    CHECK(w->vertex_sum_minus_edge_sum() == 1);
    CHECK(check_membership(tree_system(g, true), *w).ok);
    CHECK(check_membership(path_system(g, CliqueMode::All, true), *w).ok);

    Graph c7 = cycle_graph(7);
    auto w7 = non_binary_witness(c7);
    REQUIRE(w7.has_value());
    CHECK(check_membership(path_system(c7, CliqueMode::All, true), *w7).ok);
}
