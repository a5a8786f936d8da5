#include "chordalpoly/chordal.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "chordalpoly/rng.hpp"

namespace chordalpoly {

McsResult mcs_order(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> weight(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<int> visit_order;
    visit_order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
        visited[best] = true;
        visit_order.push_back(best);
        for (int w : g.neighbors(best))
            if (!visited[w]) ++weight[w];
    }
    // The first-visited vertex eliminates last.
    Peo peo;
    peo.order.assign(visit_order.rbegin(), visit_order.rend());
    return {peo, is_valid_peo(g, peo)};
}

namespace {

// Shortest path u..w inside the graph restricted to `allowed`, or empty.
// A shortest path is induced in the restriction, hence induced in g.
std::vector<int> restricted_shortest_path(const Graph& g, const std::vector<bool>& allowed,
                                          int u, int w) {
    std::vector<int> parent(g.num_vertices(), -1);
    std::deque<int> queue{u};
    std::vector<bool> seen(g.num_vertices(), false);
    seen[u] = true;
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        if (a == w) break;
        for (int b : g.neighbors(a)) {
            if (!allowed[b] || seen[b]) continue;
            seen[b] = true;
            parent[b] = a;
            queue.push_back(b);
        }
    }
    if (!seen[w]) return {};
    std::vector<int> path;
    for (int a = w; a != -1; a = parent[a]) path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
    int k = static_cast<int>(cycle.size());
    if (k < 4) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

}  // namespace

std::optional<std::vector<int>> find_hole(const Graph& g) {
    int n = g.num_vertices();
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], w = nb[j];
                if (g.has_edge(u, w)) continue;
                // A u..w path avoiding N[v] \ {u,w} closes a hole through v.
                std::vector<bool> allowed(n, true);
                allowed[v] = false;
                for (int z : nb) allowed[z] = false;
                allowed[u] = allowed[w] = true;
                auto path = restricted_shortest_path(g, allowed, u, w);
                if (path.empty()) continue;
                std::vector<int> cycle{v};
                cycle.insert(cycle.end(), path.begin(), path.end());
                if (!is_chordless_cycle(g, cycle))
                    throw TheoryViolation("find_hole produced a cycle with a chord");
                return cycle;
            }
        }
    }
    return std::nullopt;
}

std::vector<Clique> maximal_cliques(const Graph& g, const Peo& peo) {
    if (!is_valid_peo(g, peo)) throw InputError("maximal_cliques: invalid PEO");
    int n = g.num_vertices();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo.order[i]] = i;
    std::set<std::vector<int>> candidates;
    for (int i = 0; i < n; ++i) {
        int v = peo.order[i];
        std::vector<int> c{v};
        for (int w : g.neighbors(v))
            if (pos[w] > i) c.push_back(w);
        std::sort(c.begin(), c.end());
        candidates.insert(c);
    }
    std::vector<Clique> out;
    for (const auto& c : candidates) {
        bool maximal = true;
        for (const auto& d : candidates) {
            if (d.size() <= c.size() || d == c) continue;
            if (std::includes(d.begin(), d.end(), c.begin(), c.end())) { maximal = false; break; }
        }
        if (maximal) out.emplace_back(g, c);
    }
    return out;
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<Clique>& out) {
    if (p.empty() && x.empty()) {
        out.emplace_back(g, r);
        return;
    }
    int pivot = !p.empty() ? p.front() : x.front();
    for (int cand : p)
        if (g.degree(cand) > g.degree(pivot)) pivot = cand;
    std::vector<int> ext;
    for (int v : p)
        if (!g.has_edge(pivot, v)) ext.push_back(v);
    for (int v : ext) {
        std::vector<int> p2, x2;
        for (int w : p)
            if (g.has_edge(v, w)) p2.push_back(w);
        for (int w : x)
            if (g.has_edge(v, w)) x2.push_back(w);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace

std::vector<Clique> maximal_cliques_any(const Graph& g) {
    std::vector<int> all(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
    std::vector<Clique> out;
    std::vector<int> r;
    bron_kerbosch(g, r, all, {}, out);
    std::sort(out.begin(), out.end(),
              [](const Clique& a, const Clique& b) { return a.verts < b.verts; });
    return out;
}

std::vector<ComponentInfo> components_bipartite(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> color(n, -1);
    std::vector<ComponentInfo> out;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        ComponentInfo info;
        info.bipartite = true;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            info.verts.push_back(v);
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    info.bipartite = false;
                }
            }
        }
        std::sort(info.verts.begin(), info.verts.end());
        out.push_back(std::move(info));
    }
    return out;
}

Graph gen_random_chordal(int n, const Rational& density, std::uint64_t seed) {
    if (n < 1) throw InputError("gen_random_chordal: n must be >= 1");
    if (density < 0 || density > 1) throw InputError("gen_random_chordal: density outside [0,1]");
    Rng rng(seed);
    // attach_clique[i] = {i} + neighbors of i at insertion time. Any such set
    // is a clique of the final graph because edges are only ever added at the
    // newest vertex.
    std::vector<std::vector<int>> attach_clique(n);
    std::vector<std::pair<int, int>> edges;
    attach_clique[0] = {0};
    for (int i = 1; i < n; ++i) {
        int anchor = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
        std::vector<int> picked;
        for (int w : attach_clique[anchor])
            if (rng.bernoulli(density)) picked.push_back(w);
        for (int w : picked) edges.push_back({w, i});
        picked.push_back(i);
        std::sort(picked.begin(), picked.end());
        attach_clique[i] = std::move(picked);
    }
    return Graph::from_edges(n, edges);
}

}  // namespace chordalpoly
