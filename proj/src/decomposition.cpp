#include "chordalpoly/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "chordalpoly/chordal.hpp"
#include "chordalpoly/polyhedra.hpp"

namespace chordalpoly {

void Combination::add(const std::vector<int>& support, const Integer& lambda) {
    if (lambda == 0) return;
    auto it = entries.find(support);
    if (it == entries.end()) {
        if (lambda < 0) throw TheoryViolation("combination coefficient went negative");
        entries[support] = lambda;
        return;
    }
    it->second += lambda;
    if (it->second < 0) throw TheoryViolation("combination coefficient went negative");
    if (it->second == 0) entries.erase(it);
}

Integer Combination::coefficient_total() const {
    Integer total(0);
    for (const auto& [support, lambda] : entries) {
        (void)support;
        total += lambda;
    }
    return total;
}

ExtendedVector combination_sum(const Graph& g, const Combination& c) {
    ExtendedVector sum = ExtendedVector::zeros(g);
    for (const auto& [support, lambda] : c.entries)
        sum.add_scaled(incidence_vector(g, support), Rational(lambda));
    return sum;
}

namespace {

// G-neighbors of u inside the sorted set W. For an induced path these are
// exactly the path neighbors of u.
std::vector<int> neighbors_within(const Graph& g, const std::vector<int>& W, int u) {
    std::vector<int> out;
    for (int w : W)
        if (w != u && g.has_edge(u, w)) out.push_back(w);
    return out;
}

bool contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_plus(const std::vector<int>& a, int v) {
    std::vector<int> out = a;
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

}  // namespace

SpliceResult splice_paths(const Graph& g, const std::vector<int>& P1, const std::vector<int>& P2,
                          int u) {
    if (!contains(P1, u) || !contains(P2, u)) throw InputError("splice_paths: u not in both paths");
    if (!is_induced(SubgraphKind::Path, g, P1) || !is_induced(SubgraphKind::Path, g, P2))
        throw InputError("splice_paths: inputs are not induced paths");
    auto n1 = neighbors_within(g, P1, u);
    auto n2 = neighbors_within(g, P2, u);
    if (n1.size() != 1 || n2.size() != 1)
        throw InputError("splice_paths: u is not an extremity of both paths");
    if (n1[0] == n2[0]) throw InputError("splice_paths: attachment neighbors coincide");
    if (g.has_edge(n1[0], n2[0])) return {true, {}};
    std::vector<int> merged = set_union(P1, P2);
    bool exact_concat = merged.size() == P1.size() + P2.size() - 1;
    if (!exact_concat || !is_induced(SubgraphKind::Path, g, merged)) {
        if (!is_chordal(g))
            throw InputError("splice_paths: dichotomy requires a chordal graph");
        throw TheoryViolation("splice_paths: neither outcome of the dichotomy holds");
    }
    return {false, merged};
}

namespace {

// Bucket classification of one support relative to (v, u), with adjacency
// restricted to the active vertex set.
enum class BucketId { EndOnly, EndTwo, InteriorTwo, InteriorOnly, ThroughV, Rest };

struct ClassifyContext {
    const Graph& g;
    const std::vector<bool>& active;
    int v;
    std::vector<int> nv;  // active neighbors of v, sorted

    bool v_adjacent(int w) const { return contains(nv, w); }
};

BucketId classify_support(const ClassifyContext& ctx, const std::vector<int>& P, int u,
                          int* other_neighbor) {
    *other_neighbor = -1;
    bool has_u = contains(P, u);
    bool has_v = contains(P, ctx.v);
    if (!has_u) return BucketId::Rest;
    auto u_nb = neighbors_within(ctx.g, P, u);
    bool u_interior = u_nb.size() == 2;
    if (has_v) {
        auto v_nb = neighbors_within(ctx.g, P, ctx.v);
        if (v_nb.size() != 1)
            throw TheoryViolation("support contains v with more than one attachment");
        int nv = v_nb[0];
        if (nv == u) return BucketId::ThroughV;
        *other_neighbor = nv;
        return u_interior ? BucketId::InteriorTwo : BucketId::EndTwo;
    }
    std::vector<int> others;
    for (int w : P)
        if (w != u && ctx.v_adjacent(w)) others.push_back(w);
    if (others.size() > 1)
        throw TheoryViolation("support meets the simplicial neighborhood three times");
    if (!others.empty()) {
        *other_neighbor = others[0];
        return u_interior ? BucketId::InteriorTwo : BucketId::EndTwo;
    }
    return u_interior ? BucketId::InteriorOnly : BucketId::EndOnly;
}

DecompositionState classify_impl(const Graph& g, const std::vector<bool>& active, int v,
                                 const std::map<std::vector<int>, Integer>& entries) {
    ClassifyContext ctx{g, active, v, {}};
    for (int w : g.neighbors(v))
        if (active[w]) ctx.nv.push_back(w);
    if (!g.is_clique(ctx.nv)) throw InputError("classify_buckets: vertex is not simplicial");

    DecompositionState state;
    state.vertex = v;
    for (int u : ctx.nv) {
        NeighborBuckets buckets;
        std::vector<int> covered;
        for (const auto& [support, lambda] : entries) {
            (void)lambda;
            int other = -1;
            switch (classify_support(ctx, support, u, &other)) {
                case BucketId::EndOnly: buckets.end_only.push_back(support); break;
                case BucketId::EndTwo:
                    buckets.end_two.push_back(support);
                    covered.push_back(other);
                    break;
                case BucketId::InteriorTwo: buckets.interior_two.push_back(support); break;
                case BucketId::InteriorOnly: buckets.interior_only.push_back(support); break;
                case BucketId::ThroughV: buckets.through_v.push_back(support); break;
                case BucketId::Rest: buckets.rest.push_back(support); break;
            }
        }
        std::sort(covered.begin(), covered.end());
        covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
        buckets.covered = std::move(covered);
        state.buckets[u] = std::move(buckets);
    }
    return state;
}

}  // namespace

DecompositionState classify_buckets(const Graph& g, int v, const Combination& psi) {
    if (v < 0 || v >= g.num_vertices()) throw InputError("classify_buckets: vertex out of range");
    for (const auto& [support, lambda] : psi.entries) {
        (void)lambda;
        if (!is_induced(SubgraphKind::Path, g, support))
            throw InputError("classify_buckets: support is not an induced path");
    }
    std::vector<bool> active(g.num_vertices(), true);
    return classify_impl(g, active, v, psi.entries);
}

namespace {

// Shared state of one decomposition run.
struct Driver {
    const Graph& g;
    SubgraphKind kind;
    const ExtendedVector& target;
    std::vector<bool> active;
    std::map<std::vector<int>, Integer> comb;
    Integer moves_used = 0;
    Integer move_budget = 0;

    Driver(const Graph& graph, SubgraphKind k, const ExtendedVector& p)
        : g(graph), kind(k), target(p), active(graph.num_vertices(), false) {
        Rational mass(0);
        for (const auto& val : p.x) mass += val;
        for (const auto& val : p.y) mass += val;
        move_budget = 4 * Integer(graph.num_vertices() + graph.num_edges()) * mass.get_num() + 16;
    }

    Integer lambda_of(const std::vector<int>& support) const {
        auto it = comb.find(support);
        return it == comb.end() ? Integer(0) : it->second;
    }

    void spend_move(int v, int u) {
        ++moves_used;
        if (moves_used > move_budget)
            throw StuckWithPositiveGap(dump_state(v, u, "move budget exceeded"));
    }

    std::vector<int> active_neighbors(int v) const {
        std::vector<int> out;
        for (int w : g.neighbors(v))
            if (active[w]) out.push_back(w);
        return out;
    }

    Integer current_edge_value(int u, int v) const {
        Integer total(0);
        for (const auto& [support, lambda] : comb)
            if (contains(support, u) && contains(support, v)) total += lambda;
        return total;
    }

    Integer gap(int u, int v) const {
        int e = g.edge_index(u, v);
        return target.y[e].get_num() - current_edge_value(u, v);
    }

    // Conditions (i)-(ii) after every move: equality off v, dominated at v.
    void verify_partial(int v) const {
        ExtendedVector sum = ExtendedVector::zeros(g);
        for (const auto& [support, lambda] : comb) {
            for (int w : support)
                if (!active[w]) throw TheoryViolation("support leaked an inactive vertex");
            sum.add_scaled(incidence_vector(g, support), Rational(lambda));
        }
        for (int w = 0; w < g.num_vertices(); ++w) {
            if (!active[w]) continue;
            if (w == v) {
                if (sum.x[w] > target.x[w])
                    throw TheoryViolation("partial sum exceeds the target at the working vertex");
            } else if (sum.x[w] != target.x[w]) {
                throw TheoryViolation("partial sum mismatch off the working vertex");
            }
        }
        for (int e = 0; e < g.num_edges(); ++e) {
            auto [a, b] = g.edge(e);
            if (!active[a] || !active[b]) continue;
            bool at_v = a == v || b == v;
            if (at_v) {
                if (sum.y[e] > target.y[e])
                    throw TheoryViolation("partial sum exceeds the target on an edge at v");
            } else if (sum.y[e] != target.y[e]) {
                throw TheoryViolation("partial sum mismatch on a settled edge");
            }
        }
    }

    std::string dump_state(int v, int u, const std::string& why) const {
        std::ostringstream out;
        out << "decomposition stuck with positive gap: " << why << "\n";
        out << "  kind=" << kind_name(kind) << " v=" << v + 1 << " u=" << u + 1
            << " gap=" << gap(u, v).get_str() << "\n";
        out << "  combination:\n";
        for (const auto& [support, lambda] : comb) {
            out << "    " << lambda.get_str() << " :";
            for (int w : support) out << " " << w + 1;
            out << "\n";
        }
        auto fallback = oracle_hint();
        if (!fallback.empty()) out << "  " << fallback << "\n";
        return out.str();
    }

    std::string oracle_hint() const {
        if (g.num_vertices() > 12) return "";
        auto oracle = oracle_decompose(kind, g, target);
        return oracle ? "oracle: an integer decomposition of the input does exist"
                      : "oracle: no integer decomposition of the input exists";
    }

    void transfer(const std::vector<int>& from, const std::vector<int>& to, const Integer& a) {
        auto it = comb.find(from);
        if (it == comb.end() || it->second < a)
            throw TheoryViolation("move consumes more mass than available");
        it->second -= a;
        if (it->second == 0) comb.erase(it);
        if (!is_induced(kind, g, to)) throw TheoryViolation("move produced an invalid support");
        comb[to] += a;
    }

    // ----- tree branch -----

    void drive_tree_edge(int v, int u) {
        while (gap(u, v) > 0) {
            // A tree meeting N[v] exactly in u extends to include v.
            std::vector<int> pick;
            auto nv = active_neighbors(v);
            for (const auto& [support, lambda] : comb) {
                (void)lambda;
                if (!contains(support, u) || contains(support, v)) continue;
                bool clean = true;
                for (int w : nv)
                    if (w != u && contains(support, w)) { clean = false; break; }
                if (clean) { pick = support; break; }
            }
            if (pick.empty())
                throw StuckWithPositiveGap(dump_state(v, u, "no extendable tree"));
            Integer alpha = std::min(gap(u, v), lambda_of(pick));
            transfer(pick, set_plus(pick, v), alpha);
            spend_move(v, u);
            verify_partial(v);
        }
    }

    // ----- path branch -----

    struct Halves {
        std::vector<int> with_first;  // half containing the requested neighbor
        std::vector<int> other;
    };

    // Splits an induced path at interior vertex u into its two maximal
    // subpaths ending at u; `with` selects which half comes first.
    Halves split_at(const std::vector<int>& P, int u, int with) const {
        auto seq = path_sequence(g, P);
        if (!seq) throw TheoryViolation("split_at: support is not an induced path");
        auto pos = std::find(seq->begin(), seq->end(), u);
        std::vector<int> left(seq->begin(), pos + 1), right(pos, seq->end());
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        if (contains(left, with)) return {left, right};
        return {right, left};
    }

    int u_neighbor_other_than(const std::vector<int>& P, int u, int avoid) const {
        for (int w : neighbors_within(g, P, u))
            if (w != avoid) return w;
        return -1;
    }

    // Lexicographically smallest end_two support containing z.
    std::vector<int> end_two_witness(const NeighborBuckets& b, int z) const {
        for (const auto& P : b.end_two)
            if (contains(P, z)) return P;
        throw TheoryViolation("covered vertex lost its witness path");
    }

    bool move_extend(int v, int u, const NeighborBuckets& b) {  // M1
        if (b.end_only.empty()) return false;
        const auto& P = b.end_only.front();
        Integer alpha = std::min(gap(u, v), lambda_of(P));
        transfer(P, set_plus(P, v), alpha);
        spend_move(v, u);
        return true;
    }

    bool move_split_uv(int v, int u, const NeighborBuckets& b) {  // M2
        std::vector<int> uv = {std::min(u, v), std::max(u, v)};
        if (lambda_of(uv) == 0 || b.interior_only.empty()) return false;
        const auto& P = b.interior_only.front();
        Integer alpha = std::min({gap(u, v), lambda_of(P), lambda_of(uv)});
        auto nb = neighbors_within(g, P, u);
        Halves h = split_at(P, u, nb.front());
        // uv + P -> (P1 + v) + P2; P2 lands in end_only for the next round.
        auto it = comb.find(uv);
        it->second -= alpha;
        if (it->second == 0) comb.erase(it);
        transfer(P, set_plus(h.with_first, v), alpha);
        comb[h.other] += alpha;
        spend_move(v, u);
        return true;
    }

    // Shared trigger scan for M3/M4: a path neighbor u1 of u that misses some
    // z in `pool` (with an end_two witness for z).
    struct Trigger {
        std::vector<int> path;
        int u1 = -1;
        int z = -1;
    };

    std::optional<Trigger> find_nonadjacent(const std::vector<std::vector<int>>& paths, int u,
                                            int v, const std::vector<int>& pool,
                                            bool skip_v_side) const {
        for (const auto& P : paths) {
            std::vector<int> cands = neighbors_within(g, P, u);
            if (skip_v_side) std::erase(cands, v);
            for (int u1 : cands)
                for (int z : pool)
                    if (z != u1 && !g.has_edge(u1, z)) return Trigger{P, u1, z};
        }
        return std::nullopt;
    }

    bool move_reroute_interior(int v, int u, const NeighborBuckets& b) {  // M3
        auto trig = find_nonadjacent(b.interior_only, u, v, b.covered, false);
        if (!trig) return false;
        auto P2 = end_two_witness(b, trig->z);
        Halves h = split_at(trig->path, u, trig->u1);
        auto splice = splice_paths(g, h.with_first, P2, u);
        if (splice.adjacent) throw TheoryViolation("reroute selected adjacent neighbors");
        Integer alpha = std::min({gap(u, v), lambda_of(trig->path), lambda_of(P2)});
        auto it = comb.find(trig->path);
        it->second -= alpha;
        if (it->second == 0) comb.erase(it);
        transfer(P2, splice.spliced, alpha);
        auto extended = set_plus(h.other, v);
        if (!is_induced(kind, g, extended)) throw TheoryViolation("reroute built a bad support");
        comb[extended] += alpha;
        spend_move(v, u);
        return true;
    }

    bool move_reroute_through_v(int v, int u, const NeighborBuckets& b) {  // M4
        std::vector<std::vector<int>> long_through;
        for (const auto& P : b.through_v)
            if (P.size() >= 3) long_through.push_back(P);
        auto trig = find_nonadjacent(long_through, u, v, b.covered, true);
        if (!trig) return false;
        auto P2 = end_two_witness(b, trig->z);
        std::vector<int> p1 = trig->path;
        std::erase(p1, v);
        auto splice = splice_paths(g, p1, P2, u);
        if (splice.adjacent) throw TheoryViolation("reroute selected adjacent neighbors");
        Integer alpha = std::min(lambda_of(trig->path), lambda_of(P2));
        auto it = comb.find(trig->path);
        it->second -= alpha;
        if (it->second == 0) comb.erase(it);
        transfer(P2, splice.spliced, alpha);
        comb[{std::min(u, v), std::max(u, v)}] += alpha;
        spend_move(v, u);
        return true;
    }

    // M5: grow the working clique from the covered set, remembering for each
    // added vertex which path introduced it and which clique member it missed;
    // a chain of prefix swaps then turns the introducing path's covered half
    // into a new end_two element.
    bool move_chain(int v, int u, const NeighborBuckets& b) {
        std::vector<int> working = b.covered;
        std::map<int, std::vector<int>> added_by;
        std::map<int, int> witness;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& P : b.interior_two) {
                bool in_kpsi = false;
                for (int z : working)
                    if (contains(P, z)) { in_kpsi = true; break; }
                if (in_kpsi) continue;
                int side_nv = -1;  // the N(v)-side neighbor of u in P
                for (int w : neighbors_within(g, P, u))
                    if (g.has_edge(w, v)) side_nv = w;
                int outside = u_neighbor_other_than(P, u, side_nv);
                if (side_nv == -1 || outside == -1)
                    throw TheoryViolation("interior_two path without the expected neighbors");
                for (int z : working)
                    if (z != outside && !g.has_edge(outside, z)) {
                        working = set_plus(working, side_nv);
                        added_by[side_nv] = P;
                        witness[side_nv] = z;
                        grew = true;
                        break;
                    }
                if (grew) break;
            }
        }
        std::vector<int> fresh;
        for (int z : working)
            if (!contains(b.covered, z)) fresh.push_back(z);
        if (fresh.empty()) return false;

        std::vector<std::vector<int>> trigger_paths = b.interior_only;
        for (const auto& P : b.through_v)
            if (P.size() >= 3) trigger_paths.push_back(P);
        auto trig = find_nonadjacent(trigger_paths, u, v, fresh, true);
        if (!trig) return false;

        // Chain of introducing paths from the triggering vertex down to an
        // end_two witness.
        std::vector<std::vector<int>> chain;
        std::vector<int> anchors;  // anchors[i]: the working vertex inside chain[i]
        int z = trig->z;
        while (true) {
            chain.push_back(added_by.at(z));
            anchors.push_back(z);
            int next = witness.at(z);
            if (contains(b.covered, next)) {
                chain.push_back(end_two_witness(b, next));
                anchors.push_back(next);
                break;
            }
            z = next;
        }

        Integer alpha = lambda_of(chain.front());
        for (const auto& P : chain) alpha = std::min(alpha, lambda_of(P));
        if (alpha <= 0) throw TheoryViolation("chain with zero mass");

        // Split every interior link; the last link is already an end path.
        std::size_t links = chain.size();
        std::vector<std::vector<int>> covered_half(links), outside_half(links);
        for (std::size_t i = 0; i + 1 < links; ++i) {
            Halves h = split_at(chain[i], u, anchors[i]);
            covered_half[i] = h.with_first;
            outside_half[i] = h.other;
        }
        covered_half[links - 1] = chain[links - 1];

        for (const auto& P : chain) {
            auto it = comb.find(P);
            it->second -= alpha;
            if (it->second == 0) comb.erase(it);
        }
        if (!is_induced(kind, g, covered_half[0]))
            throw TheoryViolation("chain head is not an induced path");
        comb[covered_half[0]] += alpha;
        for (std::size_t i = 0; i + 1 < links; ++i) {
            auto splice = splice_paths(g, outside_half[i], covered_half[i + 1], u);
            if (splice.adjacent) throw TheoryViolation("chain link neighbors are adjacent");
            comb[splice.spliced] += alpha;
        }
        spend_move(v, u);
        return true;
    }

    void drive_path_edge(int v, int u) {
        while (gap(u, v) > 0) {
            DecompositionState state = classify_impl(g, active, v, comb);
            const NeighborBuckets& b = state.buckets.at(u);
            if (move_extend(v, u, b)) { verify_partial(v); continue; }
            if (move_split_uv(v, u, b)) { verify_partial(v); continue; }
            if (move_reroute_interior(v, u, b)) { verify_partial(v); continue; }
            if (move_reroute_through_v(v, u, b)) { verify_partial(v); continue; }
            if (move_chain(v, u, b)) { verify_partial(v); continue; }
            throw StuckWithPositiveGap(dump_state(v, u, "no move applies"));
        }
    }

    // ----- main loop -----

    Combination run() {
        auto mcs = mcs_order(g);
        const auto& order = mcs.order.order;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            int v = order[i];
            active[v] = true;
            moves_used = 0;
            // Incident edges in canonical edge index order.
            std::vector<std::pair<int, int>> incident;  // (edge index, u)
            for (int u : active_neighbors(v))
                if (u != v) incident.push_back({g.edge_index(u, v), u});
            std::sort(incident.begin(), incident.end());
            for (auto [e, u] : incident) {
                (void)e;
                if (kind == SubgraphKind::Tree)
                    drive_tree_edge(v, u);
                else
                    drive_path_edge(v, u);
            }
            Integer attached(0);
            for (auto [e, u] : incident) {
                (void)u;
                attached += target.y[e].get_num();
            }
            Integer single = target.x[v].get_num() - attached;
            if (single < 0)
                throw TheoryViolation("vertex mass below incident edge mass inside the cone");
            if (single > 0) comb[{v}] += single;
            verify_partial(v);
        }
        Combination out;
        out.entries = std::move(comb);
        return out;
    }
};

}  // namespace

Combination decompose(SubgraphKind kind, const Graph& g, const ExtendedVector& p) {
    if (!p.matches(g)) throw InputError("decompose: dimension mismatch");
    if (!is_chordal(g)) throw NonChordalInput("decompose requires a chordal graph");
    if (!p.is_integral()) throw NonIntegralPoint("decompose requires an integral point");
    LinearSystem cone = kind == SubgraphKind::Tree
                            ? tree_system(g, false)
                            : path_system(g, CliqueMode::Orbits, false);
    auto membership = check_membership(cone, p);
    if (!membership.ok) {
        std::string what = "point is outside the cone; violated rows:";
        for (const auto& tag : membership.violated) what += " " + tag.to_string();
        throw NotInCone(what);
    }
    Driver driver(g, kind, p);
    Combination result = driver.run();
    if (!verify_combination(g, kind, result, p))
        throw TheoryViolation("decompose produced a combination that fails verification");
    return result;
}

std::optional<Combination> oracle_decompose(SubgraphKind kind, const Graph& g,
                                            const ExtendedVector& p) {
    if (!p.matches(g)) throw InputError("oracle_decompose: dimension mismatch");
    if (!p.is_integral()) return std::nullopt;
    int n = g.num_vertices(), m = g.num_edges();
    std::vector<Integer> residual(n + m);
    for (int v = 0; v < n; ++v) residual[v] = p.x[v].get_num();
    for (int e = 0; e < m; ++e) residual[n + e] = p.y[e].get_num();
    for (const auto& val : residual)
        if (val < 0) return std::nullopt;

    auto sets = enumerate_induced(kind, g);
    std::vector<std::vector<int>> coords(sets.size());  // nonzero coordinates
    for (std::size_t i = 0; i < sets.size(); ++i) {
        ExtendedVector ev = incidence_vector(g, sets[i]);
        for (int v = 0; v < n; ++v)
            if (ev.x[v] == 1) coords[i].push_back(v);
        for (int e = 0; e < m; ++e)
            if (ev.y[e] == 1) coords[i].push_back(n + e);
    }
    // suffix_cover[i][c]: some set with index >= i covers coordinate c.
    std::vector<std::vector<bool>> suffix_cover(sets.size() + 1,
                                                std::vector<bool>(n + m, false));
    for (int i = static_cast<int>(sets.size()) - 1; i >= 0; --i) {
        suffix_cover[i] = suffix_cover[i + 1];
        for (int c : coords[i]) suffix_cover[i][c] = true;
    }

    std::unordered_set<std::string> dead;
    std::vector<Integer> lambdas(sets.size(), Integer(0));

    auto key_of = [&](std::size_t i, const std::vector<Integer>& r) {
        std::string key = std::to_string(i);
        for (const auto& val : r) {
            key += ',';
            key += val.get_str();
        }
        return key;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        bool zero = std::all_of(residual.begin(), residual.end(),
                                [](const Integer& v) { return v == 0; });
        if (zero) return true;
        if (i == sets.size()) return false;
        for (int c = 0; c < n + m; ++c)
            if (residual[c] > 0 && !suffix_cover[i][c]) return false;
        std::string key = key_of(i, residual);
        if (dead.count(key)) return false;
        Integer cap = residual[coords[i][0]];
        for (int c : coords[i]) cap = std::min(cap, residual[c]);
        for (Integer take = cap; take >= 0; --take) {
            for (int c : coords[i]) residual[c] -= take;
            lambdas[i] = take;
            if (search(i + 1)) return true;
            lambdas[i] = 0;
            for (int c : coords[i]) residual[c] += take;
        }
        dead.insert(std::move(key));
        return false;
    };

    if (!search(0)) return std::nullopt;
    Combination out;
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (lambdas[i] > 0) out.entries[sets[i]] = lambdas[i];
    return out;
}

bool verify_combination(const Graph& g, SubgraphKind kind, const Combination& c,
                        const ExtendedVector& p) {
    if (!p.matches(g)) return false;
    for (const auto& [support, lambda] : c.entries) {
        if (lambda < 1) return false;
        for (int v : support)
            if (v < 0 || v >= g.num_vertices()) return false;
        if (!is_induced(kind, g, support)) return false;
    }
    return combination_sum(g, c) == p;
}

}  // namespace chordalpoly
