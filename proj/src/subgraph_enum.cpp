#include "chordalpoly/subgraph_enum.hpp"

#include <algorithm>
#include <iostream>

namespace chordalpoly {

const char* kind_name(SubgraphKind kind) {
    return kind == SubgraphKind::Tree ? "tree" : "path";
}

bool is_induced(SubgraphKind kind, const Graph& g, const std::vector<int>& W) {
    if (W.empty()) throw InputError("is_induced: empty vertex set");
    auto sub = induced_subgraph(g, W);
    const Graph& h = sub.graph;
    int k = h.num_vertices();
    if (h.num_edges() != k - 1) return false;
    if (kind == SubgraphKind::Path) {
        for (int v = 0; v < k; ++v)
            if (h.degree(v) > 2) return false;
    }
    // Connectedness: k vertices, k-1 edges, so connected iff one component.
    std::vector<bool> seen(k, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : h.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == k;
}

namespace {

// Grows connected sets rooted at their minimum vertex. Every vertex added
// after the first must have exactly one neighbor inside the set (otherwise
// the induced subgraph picks up a cycle, which no superset can lose), and for
// paths the attachment endpoint must still have degree <= 1 inside the set.
// Exclusion discipline makes each set appear exactly once.
struct Enumerator {
    const Graph& g;
    SubgraphKind kind;
    std::vector<std::vector<int>> out;
    std::vector<int> current;          // sorted not required; emitted sorted
    std::vector<int> degree_in;        // degree within `current`

    explicit Enumerator(const Graph& graph, SubgraphKind k)
        : g(graph), kind(k), degree_in(graph.num_vertices(), 0) {}

    void emit() {
        std::vector<int> sorted = current;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
    }

    void grow(int root, std::vector<bool>& in_set, std::vector<bool>& banned) {
        emit();
        // Frontier: neighbors of the current set, above the root, not banned.
        std::vector<int> frontier;
        for (int v : current)
            for (int w : g.neighbors(v))
                if (w > root && !in_set[w] && !banned[w]) frontier.push_back(w);
        std::sort(frontier.begin(), frontier.end());
        frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());

        std::vector<int> banned_here;
        for (int w : frontier) {
            if (banned[w]) continue;
            int attach = -1, edges_in = 0;
            for (int z : g.neighbors(w))
                if (in_set[z]) {
                    ++edges_in;
                    attach = z;
                }
            bool ok = edges_in == 1;
            if (ok && kind == SubgraphKind::Path && degree_in[attach] >= 2) ok = false;
            if (ok) {
                current.push_back(w);
                in_set[w] = true;
                ++degree_in[attach];
                degree_in[w] = 1;
                grow(root, in_set, banned);
                degree_in[w] = 0;
                --degree_in[attach];
                in_set[w] = false;
                current.pop_back();
            }
            banned[w] = true;
            banned_here.push_back(w);
        }
        for (int w : banned_here) banned[w] = false;
    }
};

}  // namespace

std::vector<std::vector<int>> enumerate_induced(SubgraphKind kind, const Graph& g,
                                                int warn_above) {
    if (g.num_vertices() > warn_above)
        std::cerr << "warning: enumerate_induced on " << g.num_vertices()
                  << " vertices (cap " << warn_above << "); this may be slow\n";
    Enumerator en(g, kind);
    std::vector<bool> in_set(g.num_vertices(), false);
    std::vector<bool> banned(g.num_vertices(), false);
    for (int root = 0; root < g.num_vertices(); ++root) {
        en.current = {root};
        in_set[root] = true;
        en.degree_in[root] = 0;
        en.grow(root, in_set, banned);
        in_set[root] = false;
        en.current.clear();
    }
    std::sort(en.out.begin(), en.out.end());
    return en.out;
}

std::optional<std::vector<int>> path_sequence(const Graph& g, const std::vector<int>& W) {
    if (W.empty() || !is_induced(SubgraphKind::Path, g, W)) return std::nullopt;
    if (W.size() == 1) return W;
    auto sub = induced_subgraph(g, W);
    const Graph& h = sub.graph;
    int start = -1;
    for (int v = 0; v < h.num_vertices(); ++v)
        if (h.degree(v) == 1 && (start == -1 || sub.to_parent[v] < sub.to_parent[start]))
            start = v;
    std::vector<int> seq{start};
    int prev = -1, cur = start;
    while (static_cast<int>(seq.size()) < h.num_vertices()) {
        for (int w : h.neighbors(cur))
            if (w != prev) {
                seq.push_back(w);
                prev = cur;
                cur = w;
                break;
            }
    }
    std::vector<int> out;
    for (int v : seq) out.push_back(sub.to_parent[v]);
    return out;
}

}  // namespace chordalpoly
