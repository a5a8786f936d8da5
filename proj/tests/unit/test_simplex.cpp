#include <doctest.h>

#include "chordalpoly/chordal.hpp"
#include "chordalpoly/oracles.hpp"
#include "chordalpoly/polyhedra.hpp"
#include "chordalpoly/rng.hpp"
#include "chordalpoly/simplex.hpp"
#include "chordalpoly/solve.hpp"

using namespace chordalpoly;

namespace {

Graph p3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }
Graph k3() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph star() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}}); }

ExtendedVector ones(const Graph& g) {
    ExtendedVector w = ExtendedVector::zeros(g);
    for (auto& v : w.x) v = 1;
    for (auto& v : w.y) v = 1;
    return w;
}

LinearRow ineq(std::vector<std::pair<int, Rational>> coeffs, Rational rhs) {
    LinearRow row;
    row.coeffs = std::move(coeffs);
    row.rel = Rel::LessEq;
    row.rhs = std::move(rhs);
    return row;
}

}  // namespace

TEST_CASE("pinned one-variable system") {
    Graph g = Graph::from_edges(1, {});
    LinearSystem sys(g);
    sys.add_row(ineq({{0, Rational(1)}}, Rational(0)));
    sys.add_row(ineq({{0, Rational(-1)}}, Rational(0)));
    ExtendedVector obj = ExtendedVector::zeros(g);
    obj.x[0] = 1;
    LpResult res = simplex_max(sys, obj);
    CHECK(res.status == LpStatus::Optimal);
    CHECK(res.value == 0);
    CHECK(res.vertex.x[0] == 0);
}

TEST_CASE("infeasible and unbounded statuses") {
    Graph g = Graph::from_edges(1, {});
    ExtendedVector obj = ExtendedVector::zeros(g);
    obj.x[0] = 1;

    LinearSystem infeasible(g);
    infeasible.add_row(ineq({{0, Rational(1)}}, Rational(-1)));
    infeasible.add_row(ineq({{0, Rational(-1)}}, Rational(0)));
    CHECK(simplex_max(infeasible, obj).status == LpStatus::Infeasible);

    LinearSystem unbounded(g);
    unbounded.add_row(ineq({{0, Rational(-1)}}, Rational(0)));
    CHECK(simplex_max(unbounded, obj).status == LpStatus::Unbounded);
}

TEST_CASE("equality rows are honored exactly") {
    Graph g = Graph::from_edges(1, {});
    LinearSystem sys(g);
    LinearRow eq;
    eq.coeffs = {{0, Rational(3)}};
    eq.rel = Rel::Eq;
    eq.rhs = 1;
    sys.add_row(eq);
    sys.add_row(ineq({{0, Rational(-1)}}, Rational(0)));
    ExtendedVector obj = ExtendedVector::zeros(g);
    obj.x[0] = 5;
    LpResult res = simplex_max(sys, obj);
    CHECK(res.status == LpStatus::Optimal);
    CHECK(res.value == make_rational(5, 3));
    CHECK(res.vertex.x[0] == make_rational(1, 3));
}

TEST_CASE("tree polytope of P3 maximized by the whole path") {
    Graph g = p3();
    LpResult res = simplex_max(tree_system(g, true), ones(g));
    CHECK(res.status == LpStatus::Optimal);
    CHECK(res.value == 5);
    CHECK(res.vertex == incidence_vector(g, {0, 1, 2}));
}

TEST_CASE("tree polytope of K3 with heavy edges picks one edge") {
    Graph g = k3();
    ExtendedVector w = ExtendedVector::zeros(g);
    for (auto& v : w.x) v = 1;
    for (auto& v : w.y) v = 10;
    LpResult res = simplex_max(tree_system(g, true), w);
    CHECK(res.status == LpStatus::Optimal);
    CHECK(res.value == 12);
    CHECK(res.vertex.is_binary());
}

TEST_CASE("affine rank of the worked point sets") {
    Graph g = p3();
    std::vector<ExtendedVector> pts;
    for (const auto& W : enumerate_induced(SubgraphKind::Path, g))
        pts.push_back(incidence_vector(g, W));
    CHECK(pts.size() == 6);
    CHECK(affine_rank(pts) == 4);

    ExtendedVector e1 = ExtendedVector::zeros(g), e2 = ExtendedVector::zeros(g);
    e1.x[0] = 1;
    e2.x[1] = 1;
    CHECK(affine_rank({e1}) == 0);
    ExtendedVector mid = ExtendedVector::zeros(g);
    mid.x[0] = make_rational(1, 2);
    mid.x[1] = make_rational(1, 2);
    CHECK(affine_rank({e1, e2, mid}) == 1);
    CHECK_THROWS_AS(affine_rank({}), InputError);
}

TEST_CASE("max weight induced subgraphs on the worked cases") {
    auto path = max_weight_subgraph(SubgraphKind::Path, p3(), ones(p3()));
    CHECK(path.value == 5);
    CHECK(path.verts == std::vector<int>{0, 1, 2});

    auto tree = max_weight_subgraph(SubgraphKind::Tree, star(), ones(star()));
    CHECK(tree.value == 7);
    CHECK(tree.verts == std::vector<int>{0, 1, 2, 3});

    auto star_path = max_weight_subgraph(SubgraphKind::Path, star(), ones(star()));
    CHECK(star_path.value == 5);
    CHECK(star_path.verts.size() == 3);
    CHECK(std::count(star_path.verts.begin(), star_path.verts.end(), 1) == 1);

    Graph single = Graph::from_edges(1, {});
    ExtendedVector w = ExtendedVector::zeros(single);
    w.x[0] = -3;
    auto forced = max_weight_subgraph(SubgraphKind::Tree, single, w);
    CHECK(forced.value == -3);
    CHECK(forced.verts == std::vector<int>{0});
}

TEST_CASE("max weight solver rejects non-chordal graphs") {
    Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(max_weight_subgraph(SubgraphKind::Path, c4, ones(c4)), NonChordalInput);
}

TEST_CASE("simplex matches brute force on random chordal instances") {
    Rng rng(77);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + static_cast<int>(rng.below(8));
        Graph g = gen_random_chordal(n, make_rational(1, 2), rng.next());
        ExtendedVector w = ExtendedVector::zeros(g);
        for (auto& v : w.x) v = make_rational(rng.range(-6, 6), rng.range(1, 3));
        for (auto& v : w.y) v = make_rational(rng.range(-6, 6), rng.range(1, 3));
        for (SubgraphKind kind : {SubgraphKind::Tree, SubgraphKind::Path}) {
            LinearSystem sys = kind == SubgraphKind::Tree
                                   ? tree_system(g, true)
                                   : path_system(g, CliqueMode::Orbits, true);
            LpResult lp = simplex_max(sys, w);
            REQUIRE(lp.status == LpStatus::Optimal);
            Rational best;
            bool first = true;
            for (const auto& W : enumerate_induced(kind, g)) {
                ExtendedVector ev = incidence_vector(g, W);
                Rational val(0);
                for (int v = 0; v < g.num_vertices(); ++v) val += w.x[v] * ev.x[v];
                for (int e = 0; e < g.num_edges(); ++e) val += w.y[e] * ev.y[e];
                if (first || val > best) best = val;
                first = false;
            }
            CHECK(lp.value == best);
            CHECK(lp.vertex.is_binary());
        }
    }
}
