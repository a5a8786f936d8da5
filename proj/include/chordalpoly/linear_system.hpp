#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chordalpoly/extended_vector.hpp"
#include "chordalpoly/graph.hpp"
#include "chordalpoly/rational.hpp"

namespace chordalpoly {

enum class Rel { LessEq, Eq };

/// Provenance of a row: which construction produced it.
struct RowTag {
    enum class Kind { TreeClique, PathClique, NonNegVertex, NonNegEdge, Hyperplane };
    Kind kind = Kind::Hyperplane;
    int vertex = -1;            // v of TreeClique(v,K) / w of PathClique(w,K) / NonNegVertex
    int edge = -1;              // NonNegEdge
    std::vector<int> clique;    // K, sorted, 0-based

    std::string to_string() const;  // 1-based rendering
};

/// One row over the variable space V + E: variable ids 0..n-1 are vertices,
/// n..n+m-1 are edges. Sparse, sorted by variable id.
struct LinearRow {
    std::vector<std::pair<int, Rational>> coeffs;
    Rel rel = Rel::LessEq;
    Rational rhs = Rational(0);
    RowTag tag;

    Rational eval(const ExtendedVector& point, const Graph& g) const;
    bool satisfied(const ExtendedVector& point, const Graph& g) const;
};

/// Row collection bound to a graph. Rows that are scalar multiples of an
/// existing row (same relation, canonically scaled) are dropped on insert,
/// keeping systems duplicate-free.
class LinearSystem {
public:
    explicit LinearSystem(const Graph& g) : g_(&g) {}

    // Returns false when the row was a duplicate of an existing one.
    bool add_row(LinearRow row);

    const std::vector<LinearRow>& rows() const { return rows_; }
    const Graph& graph() const { return *g_; }
    int num_vars() const { return g_->num_vertices() + g_->num_edges(); }

private:
    const Graph* g_;
    std::vector<LinearRow> rows_;
    std::vector<std::string> keys_;  // canonical forms, for dedup
};

struct MembershipResult {
    bool ok = true;
    std::vector<RowTag> violated;
};

// Exact evaluation of every row.
MembershipResult check_membership(const LinearSystem& sys, const ExtendedVector& point);

// Variable names for export: x<i> and y<i>_<j> with i<j, 1-based.
std::string var_name(const Graph& g, int var);

// Text export: a comment line with the tag, then the row, for each row.
std::string to_lp_text(const LinearSystem& sys);

// Helpers shared by the system builders.
LinearRow nonneg_vertex_row(int v);
LinearRow nonneg_edge_row(const Graph& g, int e);
LinearRow hyperplane_row(const Graph& g);  // x(V) - y(E) = 1

}  // namespace chordalpoly
