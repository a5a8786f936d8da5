#include "chordalpoly/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chordalpoly {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edge_pairs) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> canon;
    for (auto [u, v] : edge_pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("loop edge");
        canon.insert({std::min(u, v), std::max(u, v)});
    }
    g.edges_.assign(canon.begin(), canon.end());
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
    std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::is_clique(const std::vector<int>& verts) const {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!has_edge(verts[i], verts[j])) return false;
    return true;
}

bool is_valid_peo(const Graph& g, const Peo& peo) {
    int n = g.num_vertices();
    if (static_cast<int>(peo.order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = peo.order[i];
        if (v < 0 || v >= n || pos[v] != -1) return false;
        pos[v] = i;
    }
    for (int i = 0; i < n; ++i) {
        int v = peo.order[i];
        std::vector<int> later;
        for (int w : g.neighbors(v))
            if (pos[w] > i) later.push_back(w);
        if (!g.is_clique(later)) return false;
    }
    return true;
}

Clique::Clique(const Graph& g, std::vector<int> v) : verts(std::move(v)) {
    std::sort(verts.begin(), verts.end());
    for (int u : verts)
        if (u < 0 || u >= g.num_vertices()) throw InputError("clique vertex out of range");
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw InputError("clique with repeated vertex");
    if (!g.is_clique(verts)) throw InputError("vertex set is not a clique");
}

Graph complement(const Graph& g) {
    int n = g.num_vertices();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& W) {
    std::vector<int> verts = W;
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw InputError("induced subgraph with repeated vertex");
    std::vector<int> to_child(g.num_vertices(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= g.num_vertices())
            throw InputError("induced subgraph vertex out of range");
        to_child[verts[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (to_child[u] != -1 && to_child[v] != -1)
            edges.push_back({to_child[u], to_child[v]});
    return {Graph::from_edges(static_cast<int>(verts.size()), edges), verts};
}

Graph contract_edges(const Graph& g, const std::vector<std::pair<int, int>>& F) {
    int n = g.num_vertices();
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : F) {
        if (u < 0 || u >= n || v < 0 || v >= n || !g.has_edge(u, v))
            throw InputError("contraction set contains a non-edge");
        int ru = find(u), rv = find(v);
        if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    }
    // Relabel components by their smallest member, in increasing order.
    std::map<int, int> label;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (!label.count(r)) label[r] = static_cast<int>(label.size());
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int a = label[find(u)], b = label[find(v)];
        if (a != b) edges.push_back({a, b});
    }
    return Graph::from_edges(static_cast<int>(label.size()), edges);
}

std::vector<int> complete_to(const Graph& g, const std::vector<int>& W) {
    std::vector<bool> in_w(g.num_vertices(), false);
    for (int w : W) {
        if (w < 0 || w >= g.num_vertices()) throw InputError("vertex out of range");
        in_w[w] = true;
    }
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (in_w[v]) continue;
        bool complete = true;
        for (int w : W)
            if (!g.has_edge(v, w)) { complete = false; break; }
        if (complete) out.push_back(v);
    }
    return out;
}

}  // namespace chordalpoly
