#include "chordalpoly/oracles.hpp"

#include <algorithm>
#include <bit>

namespace chordalpoly {

bool brute_force_has_hole(const Graph& g) {
    int n = g.num_vertices();
    if (n < 4 || n > 25) {
        if (n > 25) throw InputError("brute_force_has_hole: graph too large");
        return false;
    }
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) < 4) continue;
        bool two_regular = true;
        for (int v = 0; v < n && two_regular; ++v)
            if ((s >> v) & 1)
                if (std::popcount(adj[v] & s) != 2) two_regular = false;
        if (!two_regular) continue;
        // Connected 2-regular = a single cycle.
        int start = std::countr_zero(s);
        std::uint32_t seen = 1u << start, frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0; v < n; ++v)
                if ((frontier >> v) & 1) next |= adj[v] & s & ~seen;
            seen |= next;
            frontier = next;
        }
        if (seen == s) return true;
    }
    return false;
}

std::vector<std::vector<int>> brute_force_maximal_cliques(const Graph& g) {
    int n = g.num_vertices();
    if (n > 20) throw InputError("brute_force_maximal_cliques: graph too large");
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::vector<std::uint32_t> cliques;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        bool clique = true;
        for (int v = 0; v < n && clique; ++v)
            if ((s >> v) & 1)
                if ((adj[v] & s) != (s & ~(1u << v))) clique = false;
        if (clique) cliques.push_back(s);
    }
    std::vector<std::vector<int>> out;
    for (std::uint32_t c : cliques) {
        bool maximal = true;
        for (std::uint32_t d : cliques)
            if (d != c && (c & d) == c) { maximal = false; break; }
        if (!maximal) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if ((c >> v) & 1) verts.push_back(v);
        out.push_back(std::move(verts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph random_graph(int n, Rng& rng, unsigned long num, unsigned long den) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(num, den)) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int k) {
    if (k < 3) throw InputError("cycle_graph: need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
    return Graph::from_edges(k, edges);
}

}  // namespace chordalpoly
