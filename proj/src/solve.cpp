#include "chordalpoly/solve.hpp"

#include "chordalpoly/chordal.hpp"
#include "chordalpoly/polyhedra.hpp"
#include "chordalpoly/simplex.hpp"

namespace chordalpoly {

SolveResult max_weight_subgraph(SubgraphKind kind, const Graph& g,
                                const ExtendedVector& weights) {
    if (g.num_vertices() == 0) throw InputError("max_weight_subgraph: empty graph");
    if (!weights.matches(g)) throw InputError("max_weight_subgraph: weight dimension mismatch");
    if (!is_chordal(g)) throw NonChordalInput("max_weight_subgraph requires a chordal graph");

    LinearSystem sys = kind == SubgraphKind::Tree
                           ? tree_system(g, true)
                           : path_system(g, CliqueMode::Orbits, true);
    LpResult lp = simplex_max(sys, weights);
    if (lp.status == LpStatus::Infeasible)
        throw TheoryViolation("tree/path polytope of a nonempty graph reported infeasible");
    if (lp.status == LpStatus::Unbounded)
        throw TheoryViolation("tree/path polytope reported unbounded");

    if (!lp.vertex.is_binary())
        throw IntegralityViolation("optimal vertex is not binary on a chordal graph");
    SolveResult res;
    res.value = lp.value;
    res.vertex = lp.vertex;
    res.iterations = lp.iterations;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (lp.vertex.x[v] == 1) res.verts.push_back(v);
    if (!is_induced(kind, g, res.verts))
        throw IntegralityViolation("optimal vertex support is not an induced subgraph of the requested kind");
    if (!(incidence_vector(g, res.verts) == lp.vertex))
        throw IntegralityViolation("optimal vertex is not the incidence vector of its support");
    return res;
}

}  // namespace chordalpoly
