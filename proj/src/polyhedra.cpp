#include "chordalpoly/polyhedra.hpp"

#include <algorithm>
#include <set>

#include "chordalpoly/chordal.hpp"
#include "chordalpoly/simplex.hpp"
#include "chordalpoly/subgraph_enum.hpp"

namespace chordalpoly {

namespace {

std::vector<Clique> cliques_of(const Graph& g) {
    auto mcs = mcs_order(g);
    if (mcs.chordal) return maximal_cliques(g, mcs.order);
    return maximal_cliques_any(g);
}

}  // namespace

LinearSystem tree_system(const Graph& g, bool with_hyperplane) {
    LinearSystem sys(g);
    int n = g.num_vertices();
    for (const auto& clique : cliques_of(g)) {
        for (int v : clique.verts) {
            LinearRow row;
            for (int u : clique.verts) {
                if (u == v) continue;
                row.coeffs.push_back({n + g.edge_index(u, v), Rational(1)});
            }
            row.coeffs.push_back({v, Rational(-1)});
            row.rel = Rel::LessEq;
            row.rhs = 0;
            row.tag = {RowTag::Kind::TreeClique, v, -1, clique.verts};
            sys.add_row(std::move(row));
        }
    }
    for (int v = 0; v < n; ++v) sys.add_row(nonneg_vertex_row(v));
    for (int e = 0; e < g.num_edges(); ++e) sys.add_row(nonneg_edge_row(g, e));
    if (with_hyperplane) sys.add_row(hyperplane_row(g));
    return sys;
}

LinearRow path_clique_row(const Graph& g, int w, const std::vector<int>& K) {
    for (int u : K)
        if (!g.has_edge(w, u)) throw InputError("path_clique_row: K not inside N(w)");
    if (!g.is_clique(K)) throw InputError("path_clique_row: K is not a clique");
    int n = g.num_vertices();
    std::vector<int> kw = K;
    kw.push_back(w);
    std::sort(kw.begin(), kw.end());
    LinearRow row;
    for (int z : complete_to(g, kw)) {
        int e = g.edge_index(w, z);
        if (e != -1) row.coeffs.push_back({n + e, Rational(1)});
    }
    for (int u : K) row.coeffs.push_back({n + g.edge_index(w, u), Rational(2)});
    row.coeffs.push_back({w, Rational(-2)});
    row.rel = Rel::LessEq;
    row.rhs = 0;
    std::vector<int> k_sorted = K;
    std::sort(k_sorted.begin(), k_sorted.end());
    row.tag = {RowTag::Kind::PathClique, w, -1, k_sorted};
    return row;
}

namespace {

// All cliques of G[N(w)], the empty clique included.
std::vector<std::vector<int>> all_neighborhood_cliques(const Graph& g, int w) {
    const auto& nb = g.neighbors(w);
    std::vector<std::vector<int>> out{{}};
    // Grow cliques in index order; each clique is generated once.
    std::vector<std::vector<int>> frontier{{}};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& c : frontier) {
            for (int u : nb) {
                if (!c.empty() && u <= c.back()) continue;
                bool ok = true;
                for (int z : c)
                    if (!g.has_edge(z, u)) { ok = false; break; }
                if (!ok) continue;
                auto c2 = c;
                c2.push_back(u);
                out.push_back(c2);
                next.push_back(std::move(c2));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::vector<int> closure_of(const Graph& g, int w, const std::vector<int>& K) {
    std::vector<int> kw = K;
    kw.push_back(w);
    std::sort(kw.begin(), kw.end());
    auto closure = complete_to(g, kw);
    closure.insert(closure.end(), kw.begin(), kw.end());
    std::sort(closure.begin(), closure.end());
    return closure;
}

OrbitClique make_orbit_clique(const Graph& g, int w, std::vector<int> K) {
    std::sort(K.begin(), K.end());
    OrbitClique oc;
    oc.w = w;
    oc.closure = closure_of(g, w, K);
    auto check = is_facet_defining(g, w, K);
    oc.clique = std::move(K);
    oc.facet = check.facet;
    oc.vacuous = check.vacuous;
    return oc;
}

}  // namespace

LinearSystem path_system(const Graph& g, CliqueMode mode, bool with_hyperplane) {
    LinearSystem sys(g);
    int n = g.num_vertices();
    if (mode == CliqueMode::Orbits) {
        long total = 0;
        for (int w = 0; w < n; ++w) {
            auto orbits = orbit_cliques(g, w);
            total += static_cast<long>(orbits.size());
            for (const auto& oc : orbits) sys.add_row(path_clique_row(g, w, oc.clique));
        }
        if (total > 2L * n * n)
            throw TheoryViolation("orbit row count exceeds 2n^2: " + std::to_string(total));
    } else {
        for (int w = 0; w < n; ++w)
            for (const auto& K : all_neighborhood_cliques(g, w))
                sys.add_row(path_clique_row(g, w, K));
    }
    for (int v = 0; v < n; ++v) sys.add_row(nonneg_vertex_row(v));
    for (int e = 0; e < g.num_edges(); ++e) sys.add_row(nonneg_edge_row(g, e));
    if (with_hyperplane) sys.add_row(hyperplane_row(g));
    return sys;
}

std::vector<OrbitClique> orbit_cliques(const Graph& g, int w) {
    if (!is_chordal(g)) throw NonChordalInput("orbit_cliques requires a chordal graph");
    const auto& nb = g.neighbors(w);
    int k = static_cast<int>(nb.size());
    if (k == 0) return {make_orbit_clique(g, w, {})};

    // Auxiliary graph on N(w) + one true twin per vertex: vertices 0..k-1
    // mirror N(w), vertex k+i is the twin of nb[i]. The twin of u is adjacent
    // to u and to u's neighbors inside N(w); the twins form a clique.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(nb[i], nb[j])) {
                edges.push_back({i, j});
                edges.push_back({k + i, j});
                edges.push_back({i, k + j});
            }
    for (int i = 0; i < k; ++i) edges.push_back({i, k + i});
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.push_back({k + i, k + j});
    Graph aux = Graph::from_edges(2 * k, edges);

    // The maximal cliques of the auxiliary graph are in bijection with the
    // orbit-defining cliques of w, independently of whether the auxiliary
    // graph is chordal. It usually is, and the PEO route is then linear; an
    // induced P4 inside G[N(w)] makes it non-chordal (two adjacent originals
    // plus the twins of their private neighbors form a 4-hole), in which
    // case the generic enumeration takes over.
    auto mcs = mcs_order(aux);
    auto clique_list = mcs.chordal ? maximal_cliques(aux, mcs.order) : maximal_cliques_any(aux);
    std::set<std::vector<int>> projected;
    for (const auto& clique : clique_list) {
        std::vector<int> K;
        for (int v : clique.verts)
            if (v < k) K.push_back(nb[v]);
        std::sort(K.begin(), K.end());
        projected.insert(std::move(K));
    }
    std::vector<OrbitClique> out;
    for (const auto& K : projected) out.push_back(make_orbit_clique(g, w, K));
    return out;
}

std::vector<OrbitClique> orbit_cliques_oracle(const Graph& g, int w) {
    auto cliques = all_neighborhood_cliques(g, w);
    std::vector<std::vector<int>> closures;
    closures.reserve(cliques.size());
    for (const auto& K : cliques) closures.push_back(closure_of(g, w, K));
    std::vector<OrbitClique> out;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cliques.size() && !dominated; ++j) {
            if (cliques[j].size() <= cliques[i].size()) continue;
            if (!std::includes(cliques[j].begin(), cliques[j].end(), cliques[i].begin(),
                               cliques[i].end()))
                continue;
            if (std::includes(closures[j].begin(), closures[j].end(), closures[i].begin(),
                              closures[i].end()))
                dominated = true;
        }
        if (!dominated) out.push_back(make_orbit_clique(g, w, cliques[i]));
    }
    std::sort(out.begin(), out.end(),
              [](const OrbitClique& a, const OrbitClique& b) { return a.clique < b.clique; });
    return out;
}

FacetCheck is_facet_defining(const Graph& g, int w, const std::vector<int>& K) {
    for (int u : K)
        if (!g.has_edge(w, u)) throw InputError("is_facet_defining: K not inside N(w)");
    if (!g.is_clique(K)) throw InputError("is_facet_defining: K is not a clique");
    std::vector<int> kw = K;
    kw.push_back(w);
    auto c = complete_to(g, kw);
    if (c.empty()) return {true, true};
    auto sub = induced_subgraph(g, c);
    Graph comp = complement(sub.graph);
    for (const auto& info : components_bipartite(comp))
        if (info.bipartite) return {false, false};
    return {true, false};
}

RankStatus facet_rank_status(const Graph& g, const LinearRow& row,
                             const std::vector<ExtendedVector>& path_vectors,
                             long polytope_dim) {
    std::vector<ExtendedVector> tight;
    for (const auto& ev : path_vectors)
        if (row.eval(ev, g) == row.rhs) tight.push_back(ev);
    long tight_dim = tight.empty() ? -1 : affine_rank(tight);
    if (tight_dim == polytope_dim) return RankStatus::Improper;
    return tight_dim == polytope_dim - 1 ? RankStatus::Facet : RankStatus::NotFacet;
}

RankStatus facet_rank_oracle(const Graph& g, int w, const std::vector<int>& K) {
    std::vector<ExtendedVector> all;
    for (const auto& W : enumerate_induced(SubgraphKind::Path, g))
        all.push_back(incidence_vector(g, W));
    return facet_rank_status(g, path_clique_row(g, w, K), all, affine_rank(all));
}

std::optional<ExtendedVector> non_binary_witness(const Graph& g) {
    auto hole = find_hole(g);
    if (!hole) return std::nullopt;
    // x = 1 on the hole (2 on one chosen hole vertex), y = 1 on its edges:
    // a point of both systems that leaves the 0/1 box. Restricting the
    // support to the hole keeps x(V) - y(E) = 1 on graphs where the hole
    // does not span every vertex.
    ExtendedVector ev = ExtendedVector::zeros(g);
    for (int v : *hole) ev.x[v] = 1;
    ev.x[hole->front()] = 2;
    int len = static_cast<int>(hole->size());
    for (int i = 0; i < len; ++i) {
        int e = g.edge_index((*hole)[i], (*hole)[(i + 1) % len]);
        ev.y[e] = 1;
    }
    return ev;
}

}  // namespace chordalpoly
