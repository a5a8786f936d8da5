#include "chordalpoly/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "chordalpoly/chordal.hpp"
#include "chordalpoly/decomposition.hpp"
#include "chordalpoly/oracles.hpp"
#include "chordalpoly/polyhedra.hpp"
#include "chordalpoly/rng.hpp"
#include "chordalpoly/simplex.hpp"
#include "chordalpoly/solve.hpp"
#include "chordalpoly/subgraph_enum.hpp"

namespace chordalpoly {

void SuiteResult::fail(std::string message) {
    passed = false;
    if (failures.size() < 8) failures.push_back(std::move(message));
}

namespace {

const std::pair<unsigned long, unsigned long> kDensities[] = {
    {1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}};

Graph sample_chordal(Rng& rng, int n_max) {
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max)));
    auto [num, den] = kDensities[rng.below(5)];
    return gen_random_chordal(n, make_rational(static_cast<long>(num), static_cast<long>(den)),
                              rng.next());
}

Graph sample_nonchordal(Rng& rng, int n_max) {
    int n = std::max(4, n_max);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int verts = 4 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 3)));
        auto [num, den] = kDensities[rng.below(5)];
        Graph g = random_graph(verts, rng, num, den);
        if (!is_chordal(g)) return g;
    }
    throw TheoryViolation("failed to sample a non-chordal graph in 1000 attempts");
}

ExtendedVector random_int_weights(const Graph& g, Rng& rng, long lo, long hi) {
    ExtendedVector w = ExtendedVector::zeros(g);
    for (auto& val : w.x) val = Rational(rng.range(lo, hi));
    for (auto& val : w.y) val = Rational(rng.range(lo, hi));
    return w;
}

Rational dot_weight(const ExtendedVector& w, const ExtendedVector& p) {
    Rational total(0);
    for (std::size_t i = 0; i < w.x.size(); ++i) total += w.x[i] * p.x[i];
    for (std::size_t i = 0; i < w.y.size(); ++i) total += w.y[i] * p.y[i];
    return total;
}

std::string show_set(const std::vector<int>& verts) {
    std::string s = "{";
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(verts[i] + 1);
    }
    return s + "}";
}

// ---------------------------------------------------------------- suites --

SuiteResult suite_chordality(int n_max, long trials, std::uint64_t seed) {
    if (n_max <= 0) n_max = 7;
    if (trials <= 0) trials = 1000;
    SuiteResult res;
    res.name = "chordality";
    auto check = [&](const Graph& g, const std::string& label) {
        ++res.checks;
        bool brute = brute_force_has_hole(g);
        auto mcs = mcs_order(g);
        auto hole = find_hole(g);
        if (mcs.chordal == brute)
            res.fail(label + ": mcs flag disagrees with exhaustive hole search");
        if (hole.has_value() != brute) res.fail(label + ": find_hole disagrees with brute force");
        if (mcs.chordal && !is_valid_peo(g, mcs.order)) res.fail(label + ": returned PEO invalid");
    };
    int exhaustive_limit = std::min(n_max, 6);
    for (int n = 1; n <= exhaustive_limit; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask)
            check(graph_from_mask(n, mask), "n=" + std::to_string(n) + " mask=" + std::to_string(mask));
    }
    if (n_max > exhaustive_limit) {
        Rng rng(seed);
        for (long t = 0; t < trials; ++t) {
            auto [num, den] = kDensities[rng.below(5)];
            check(random_graph(n_max, rng, num, den), "random trial " + std::to_string(t));
        }
    }
    return res;
}

SuiteResult suite_systems(int n_max, long trials, std::uint64_t seed) {
    if (n_max <= 0) n_max = 8;
    if (trials <= 0) trials = 50;
    SuiteResult res;
    res.name = "systems";
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        Graph g = sample_chordal(rng, n_max);
        std::string label = "trial " + std::to_string(t);
        int n = g.num_vertices(), m = g.num_edges();
        auto trees = enumerate_induced(SubgraphKind::Tree, g);
        auto paths = enumerate_induced(SubgraphKind::Path, g);
        ++res.checks;
        if (paths.size() > trees.size()) res.fail(label + ": more paths than trees");
        for (const auto& p : paths)
            if (!std::binary_search(trees.begin(), trees.end(), p))
                res.fail(label + ": a path set is not a tree set");
        LinearSystem tree_poly = tree_system(g, true);
        LinearSystem path_orb = path_system(g, CliqueMode::Orbits, true);
        LinearSystem path_all = path_system(g, CliqueMode::All, true);
        for (const auto& W : trees) {
            ExtendedVector ev = incidence_vector(g, W);
            if (!check_membership(tree_poly, ev).ok)
                res.fail(label + ": tree vector outside the tree system " + show_set(W));
            if (ev.vertex_sum_minus_edge_sum() != 1)
                res.fail(label + ": tree vector off the hyperplane " + show_set(W));
        }
        for (const auto& W : paths) {
            ExtendedVector ev = incidence_vector(g, W);
            if (!check_membership(path_orb, ev).ok || !check_membership(path_all, ev).ok)
                res.fail(label + ": path vector outside a path system " + show_set(W));
        }
        std::size_t max_clique_count = maximal_cliques(g, mcs_order(g).order).size();
        if (tree_poly.rows().size() > max_clique_count * n + n + m + 1)
            res.fail(label + ": tree system exceeds its size bound");
        if (path_orb.rows().size() > static_cast<std::size_t>(2 * n * n + n + m + 1))
            res.fail(label + ": orbit path system exceeds its size bound");
    }
    return res;
}

SuiteResult suite_lp_vs_bruteforce(int n_max, long trials, std::uint64_t seed) {
    if (n_max <= 0) n_max = 10;
    if (trials <= 0) trials = 200;
    SuiteResult res;
    res.name = "lp-vs-bruteforce";
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        Graph g = sample_chordal(rng, n_max);
        ExtendedVector weights = random_int_weights(g, rng, -5, 5);
        for (SubgraphKind kind : {SubgraphKind::Tree, SubgraphKind::Path}) {
            ++res.checks;
            std::string label =
                "trial " + std::to_string(t) + " " + kind_name(kind) + " n=" +
                std::to_string(g.num_vertices());
            SolveResult lp;
            try {
                lp = max_weight_subgraph(kind, g, weights);
            } catch (const std::exception& e) {
                res.fail(label + ": solver threw: " + e.what());
                continue;
            }
            Rational best;
            bool first = true;
            for (const auto& W : enumerate_induced(kind, g)) {
                Rational val = dot_weight(weights, incidence_vector(g, W));
                if (first || val > best) best = val;
                first = false;
            }
            if (lp.value != best)
                res.fail(label + ": LP value " + rational_to_string(lp.value) +
                         " != brute force " + rational_to_string(best));
            if (dot_weight(weights, lp.vertex) != lp.value)
                res.fail(label + ": reported value does not match the vertex");
        }
    }
    return res;
}

Combination random_combination(Rng& rng, const std::vector<std::vector<int>>& sets,
                               int max_supports, long max_lambda) {
    Combination c;
    int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_supports)));
    for (int i = 0; i < count; ++i) {
        const auto& support = sets[rng.below(sets.size())];
        c.add(support, Integer(1 + rng.below(static_cast<std::uint64_t>(max_lambda))));
    }
    return c;
}

SuiteResult suite_decomposition_roundtrip(int n_max, long trials, std::uint64_t seed) {
    if (n_max <= 0) n_max = 10;
    if (trials <= 0) trials = 200;
    SuiteResult res;
    res.name = "decomposition-roundtrip";
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        Graph g = sample_chordal(rng, n_max);
        for (SubgraphKind kind : {SubgraphKind::Tree, SubgraphKind::Path}) {
            ++res.checks;
            std::string label = "trial " + std::to_string(t) + " " + kind_name(kind);
            auto sets = enumerate_induced(kind, g);
            Combination in = random_combination(rng, sets, 5, 3);
            ExtendedVector p = combination_sum(g, in);
            try {
                Combination out = decompose(kind, g, p);
                if (!verify_combination(g, kind, out, p))
                    res.fail(label + ": decomposition failed verification");
                if (Rational(out.coefficient_total()) != p.vertex_sum_minus_edge_sum())
                    res.fail(label + ": coefficient total != x(V) - y(E)");
            } catch (const std::exception& e) {
                res.fail(label + ": " + e.what());
            }
        }
    }
    return res;
}

SuiteResult suite_idp(int n_max, long trials, std::uint64_t seed) {
    if (n_max <= 0) n_max = 10;
    if (trials <= 0) trials = 100;
    SuiteResult res;
    res.name = "idp";
    for (int k = 2; k <= 4; ++k) {
        for (long t = 0; t < trials; ++t) {
            Rng rng(Rng::derive(seed ^ (0xABCD0000ULL + static_cast<std::uint64_t>(k)),
                                static_cast<std::uint64_t>(t)));
            Graph g = sample_chordal(rng, n_max);
            for (SubgraphKind kind : {SubgraphKind::Tree, SubgraphKind::Path}) {
                ++res.checks;
                std::string label =
                    "k=" + std::to_string(k) + " trial " + std::to_string(t) + " " + kind_name(kind);
                auto sets = enumerate_induced(kind, g);
                ExtendedVector p = ExtendedVector::zeros(g);
                for (int i = 0; i < k; ++i)
                    p.add_scaled(incidence_vector(g, sets[rng.below(sets.size())]), Rational(1));
                try {
                    Combination out = decompose(kind, g, p);
                    if (!verify_combination(g, kind, out, p))
                        res.fail(label + ": decomposition failed verification");
                    if (out.coefficient_total() != k)
                        res.fail(label + ": coefficient total != k");
                } catch (const std::exception& e) {
                    res.fail(label + ": " + e.what());
                }
            }
        }
    }
    return res;
}

SuiteResult suite_facets_vs_oracle(int n_max, long trials, std::uint64_t seed) {
    if (n_max <= 0) n_max = 7;
    if (trials <= 0) trials = 100;
    SuiteResult res;
    res.name = "facets-vs-oracle";
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        Graph g = sample_chordal(rng, std::min(n_max, 7));
        std::vector<ExtendedVector> vectors;
        for (const auto& W : enumerate_induced(SubgraphKind::Path, g))
            vectors.push_back(incidence_vector(g, W));
        long dim = affine_rank(vectors);
        for (int w = 0; w < g.num_vertices(); ++w) {
            for (const auto& oc : orbit_cliques(g, w)) {
                ++res.checks;
                RankStatus rank =
                    facet_rank_status(g, path_clique_row(g, w, oc.clique), vectors, dim);
                if (rank == RankStatus::Improper)
                    res.fail("trial " + std::to_string(t) + " w=" + std::to_string(w + 1) +
                             " K=" + show_set(oc.clique) + ": oracle reports improper");
                else if (oc.facet != (rank == RankStatus::Facet))
                    res.fail("trial " + std::to_string(t) + " w=" + std::to_string(w + 1) +
                             " K=" + show_set(oc.clique) + ": classifier says " +
                             (oc.facet ? "facet" : "non-facet") + ", rank oracle disagrees");
            }
        }
    }
    return res;
}

SuiteResult suite_orbits_vs_oracle(int n_max, long trials, std::uint64_t seed) {
    if (n_max <= 0) n_max = 8;
    if (trials <= 0) trials = 100;
    SuiteResult res;
    res.name = "orbits-vs-oracle";
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        Graph g = sample_chordal(rng, n_max);
        int n = g.num_vertices();
        long total = 0;
        for (int w = 0; w < n; ++w) {
            ++res.checks;
            auto fast = orbit_cliques(g, w);
            auto oracle = orbit_cliques_oracle(g, w);
            std::set<std::vector<int>> a, b;
            for (const auto& oc : fast) a.insert(oc.clique);
            for (const auto& oc : oracle) b.insert(oc.clique);
            std::string label = "trial " + std::to_string(t) + " w=" + std::to_string(w + 1);
            if (a != b) res.fail(label + ": twin construction disagrees with the oracle");
            if (static_cast<long>(fast.size()) > 2L * n) res.fail(label + ": more than 2n orbits");
            total += static_cast<long>(fast.size());
        }
        if (total > 2L * n * n)
            res.fail("trial " + std::to_string(t) + ": total orbit rows exceed 2n^2");
    }
    return res;
}

SuiteResult suite_domination(int n_max, long trials, std::uint64_t seed) {
    if (n_max <= 0) n_max = 8;
    if (trials <= 0) trials = 50;
    SuiteResult res;
    res.name = "domination";
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        Graph g = sample_chordal(rng, n_max);
        ExtendedVector obj = ExtendedVector::zeros(g);
        for (auto& val : obj.x) val = make_rational(rng.range(-5, 5), rng.range(1, 3));
        for (auto& val : obj.y) val = make_rational(rng.range(-5, 5), rng.range(1, 3));
        ++res.checks;
        std::string label = "trial " + std::to_string(t);
        LpResult a = simplex_max(path_system(g, CliqueMode::Orbits, true), obj);
        LpResult b = simplex_max(path_system(g, CliqueMode::All, true), obj);
        if (a.status != LpStatus::Optimal || b.status != LpStatus::Optimal)
            res.fail(label + ": unexpected LP status");
        else if (a.value != b.value)
            res.fail(label + ": orbit optimum " + rational_to_string(a.value) +
                     " != all-cliques optimum " + rational_to_string(b.value));
    }
    return res;
}

SuiteResult suite_contraction(int n_max, long trials, std::uint64_t seed) {
    if (n_max <= 0) n_max = 10;
    if (trials <= 0) trials = 500;
    SuiteResult res;
    res.name = "contraction";
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        Graph g = sample_chordal(rng, n_max);
        std::vector<std::pair<int, int>> F;
        for (auto e : g.edges())
            if (rng.bernoulli(1, 3)) F.push_back(e);
        ++res.checks;
        Graph contracted = contract_edges(g, F);
        if (!is_chordal(contracted))
            res.fail("trial " + std::to_string(t) + ": contraction left chordality");
    }
    return res;
}

SuiteResult suite_splice(int n_max, long trials, std::uint64_t seed) {
    if (n_max <= 0) n_max = 7;
    if (trials <= 0) trials = 100;
    SuiteResult res;
    res.name = "splice";
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        Graph g = sample_chordal(rng, std::min(n_max, 7));
        auto paths = enumerate_induced(SubgraphKind::Path, g);
        // Paths of length >= 1 grouped by extremity.
        std::map<int, std::vector<const std::vector<int>*>> ending_at;
        for (const auto& P : paths) {
            if (P.size() < 2) continue;
            auto seq = path_sequence(g, P);
            ending_at[seq->front()].push_back(&P);
            ending_at[seq->back()].push_back(&P);
        }
        for (const auto& [u, list] : ending_at) {
            for (std::size_t i = 0; i < list.size(); ++i) {
                for (std::size_t j = 0; j < list.size(); ++j) {
                    if (i == j) continue;
                    const auto& P1 = *list[i];
                    const auto& P2 = *list[j];
                    int u1 = -1, u2 = -1;
                    for (int w : g.neighbors(u)) {
                        if (std::binary_search(P1.begin(), P1.end(), w)) u1 = w;
                    }
                    // Attachment neighbors are unique since u is an extremity.
                    for (int w : g.neighbors(u))
                        if (std::binary_search(P2.begin(), P2.end(), w)) u2 = w;
                    if (u1 == u2) continue;
                    ++res.checks;
                    try {
                        splice_paths(g, P1, P2, u);
                    } catch (const std::exception& e) {
                        res.fail("trial " + std::to_string(t) + " u=" + std::to_string(u + 1) +
                                 " P1=" + show_set(P1) + " P2=" + show_set(P2) + ": " + e.what());
                    }
                }
            }
        }
    }
    return res;
}

SuiteResult suite_witness(int n_max, long trials, std::uint64_t seed) {
    if (n_max <= 0) n_max = 8;
    if (trials <= 0) trials = 50;
    SuiteResult res;
    res.name = "witness";
    auto check = [&](const Graph& g, const std::string& label) {
        ++res.checks;
        auto w = non_binary_witness(g);
        if (!w) {
            res.fail(label + ": no witness for a non-chordal graph");
            return;
        }
        bool has_two = false;
        for (const auto& val : w->x)
            if (val == 2) has_two = true;
        if (!has_two) res.fail(label + ": witness has no coordinate equal to 2");
        if (w->is_binary()) res.fail(label + ": witness stayed inside the 0/1 box");
        if (!check_membership(tree_system(g, true), *w).ok)
            res.fail(label + ": witness violates the tree system");
        if (!check_membership(path_system(g, CliqueMode::All, true), *w).ok)
            res.fail(label + ": witness violates the path system");
    };
    for (int k = 4; k <= 8; ++k) check(cycle_graph(k), "C" + std::to_string(k));
    Rng rng(seed);
    for (long t = 0; t < trials; ++t)
        check(sample_nonchordal(rng, n_max), "random trial " + std::to_string(t));
    // Chordal inputs must produce no witness.
    Rng rng2(seed ^ 0x5eedULL);
    for (int t = 0; t < 10; ++t) {
        Graph g = sample_chordal(rng2, n_max);
        ++res.checks;
        if (non_binary_witness(g))
            res.fail("chordal sample " + std::to_string(t) + " produced a witness");
    }
    return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "chordality",    "systems",          "lp-vs-bruteforce", "decomposition-roundtrip",
        "idp",           "facets-vs-oracle", "orbits-vs-oracle", "domination",
        "contraction",   "splice",           "witness"};
    return names;
}

SuiteResult run_suite(const std::string& name, int n_max, long trials, std::uint64_t seed) {
    if (name == "chordality") return suite_chordality(n_max, trials, seed);
    if (name == "systems") return suite_systems(n_max, trials, seed);
    if (name == "lp-vs-bruteforce") return suite_lp_vs_bruteforce(n_max, trials, seed);
    if (name == "decomposition-roundtrip") return suite_decomposition_roundtrip(n_max, trials, seed);
    if (name == "idp") return suite_idp(n_max, trials, seed);
    if (name == "facets-vs-oracle") return suite_facets_vs_oracle(n_max, trials, seed);
    if (name == "orbits-vs-oracle") return suite_orbits_vs_oracle(n_max, trials, seed);
    if (name == "domination") return suite_domination(n_max, trials, seed);
    if (name == "contraction") return suite_contraction(n_max, trials, seed);
    if (name == "splice") return suite_splice(n_max, trials, seed);
    if (name == "witness") return suite_witness(n_max, trials, seed);
    throw InputError("unknown suite '" + name + "'");
}

StretchResult c7_hilbert_search(long budget_candidates, std::uint64_t seed) {
    (void)seed;  // the search is exhaustive in a deterministic order
    StretchResult res;
    Graph g = complement(cycle_graph(7));
    auto sets = enumerate_induced(SubgraphKind::Tree, g);
    int n = g.num_vertices(), m = g.num_edges();
    int dims = n + m;
    std::vector<std::vector<long>> vecs;
    for (const auto& W : sets) {
        ExtendedVector ev = incidence_vector(g, W);
        std::vector<long> flat(dims);
        for (int v = 0; v < n; ++v) flat[v] = ev.x[v] == 1 ? 1 : 0;
        for (int e = 0; e < m; ++e) flat[n + e] = ev.y[e] == 1 ? 1 : 0;
        vecs.push_back(std::move(flat));
    }
    // Pair sums sharing a parity pattern give integral half-sums of four
    // incidence vectors; those are the integer cone points we probe.
    std::map<std::uint32_t, std::vector<std::pair<int, int>>> by_parity;
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = i; j < vecs.size(); ++j) {
            std::uint32_t parity = 0;
            for (int c = 0; c < dims; ++c)
                if ((vecs[i][c] + vecs[j][c]) % 2) parity |= 1u << c;
            by_parity[parity].push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    std::set<std::vector<long>> tried;
    for (const auto& [parity, pairs] : by_parity) {
        (void)parity;
        for (std::size_t a = 0; a < pairs.size(); ++a) {
            for (std::size_t b = a; b < pairs.size(); ++b) {
                if (res.candidates >= budget_candidates) break;
                auto [i1, j1] = pairs[a];
                auto [i2, j2] = pairs[b];
                std::vector<long> point(dims);
                for (int c = 0; c < dims; ++c)
                    point[c] = (vecs[i1][c] + vecs[j1][c] + vecs[i2][c] + vecs[j2][c]) / 2;
                if (!tried.insert(point).second) continue;
                ++res.candidates;
                ExtendedVector p = ExtendedVector::zeros(g);
                for (int v = 0; v < n; ++v) p.x[v] = point[v];
                for (int e = 0; e < m; ++e) p.y[e] = point[n + e];
                if (oracle_decompose(SubgraphKind::Tree, g, p)) continue;
                // Re-certify cone membership by LP feasibility over the
                // incidence vectors before claiming a find.
                DenseLp lp;
                lp.dim = static_cast<int>(vecs.size());
                for (int c = 0; c < dims; ++c) {
                    DenseLp::Row row;
                    row.coeffs.assign(lp.dim, Rational(0));
                    for (int t = 0; t < lp.dim; ++t) row.coeffs[t] = Rational(vecs[t][c]);
                    row.rel = Rel::Eq;
                    row.rhs = Rational(point[c]);
                    lp.rows.push_back(std::move(row));
                }
                for (int t = 0; t < lp.dim; ++t) {
                    DenseLp::Row row;
                    row.coeffs.assign(lp.dim, Rational(0));
                    row.coeffs[t] = Rational(-1);
                    lp.rows.push_back(std::move(row));
                }
                std::vector<Rational> zero(lp.dim, Rational(0));
                if (dense_simplex_max(lp, zero).status != LpStatus::Optimal) continue;
                res.found = true;
                std::ostringstream detail;
                detail << "integer cone point with no integer decomposition:";
                for (int v = 0; v < n; ++v)
                    if (point[v]) detail << " x" << v + 1 << "=" << point[v];
                for (int e = 0; e < m; ++e)
                    if (point[n + e])
                        detail << " y" << g.edge(e).first + 1 << "_" << g.edge(e).second + 1 << "="
                               << point[n + e];
                res.detail = detail.str();
                return res;
            }
            if (res.candidates >= budget_candidates) break;
        }
        if (res.candidates >= budget_candidates) break;
    }
    res.detail = "no witness found among " + std::to_string(res.candidates) +
                 " candidate half-sum points";
    return res;
}

}  // namespace chordalpoly
