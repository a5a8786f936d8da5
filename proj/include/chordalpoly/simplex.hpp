#pragma once

#include <vector>

#include "chordalpoly/extended_vector.hpp"
#include "chordalpoly/linear_system.hpp"

namespace chordalpoly {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value = Rational(0);
    ExtendedVector vertex;
    long iterations = 0;
};

/// Exact two-phase primal simplex over the rows of `sys`, maximizing
/// objective . point. The working basis is a set of n+m tight rows, so the
/// returned point is always a vertex of {z : rows hold}; equality rows stay
/// tight throughout. Bland's least-index rule on both pivots guarantees
/// termination; arithmetic is exact rational with zero tolerances. On
/// Optimal, the vertex is re-checked against every row before returning.
LpResult simplex_max(const LinearSystem& sys, const ExtendedVector& objective);

/// Dimension of the affine hull of the given nonempty point set (exact
/// Gaussian elimination on differences to the first point).
long affine_rank(const std::vector<ExtendedVector>& points);

// Same solver over a plain dense row description, for LPs whose variable
// space is not V + E of a graph.
struct DenseLp {
    struct Row {
        std::vector<Rational> coeffs;
        Rel rel = Rel::LessEq;
        Rational rhs = Rational(0);
    };
    int dim = 0;
    std::vector<Row> rows;
};

struct DenseLpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value = Rational(0);
    std::vector<Rational> point;
    long iterations = 0;
};

DenseLpResult dense_simplex_max(const DenseLp& lp, const std::vector<Rational>& objective);

}  // namespace chordalpoly
