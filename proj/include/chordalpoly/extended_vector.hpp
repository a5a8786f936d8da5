#pragma once

#include <vector>

#include "chordalpoly/graph.hpp"
#include "chordalpoly/rational.hpp"

namespace chordalpoly {

/// Rational vector over V + E of a fixed reference graph: x per vertex,
/// y per edge (by canonical edge index). Incidence vectors of vertex sets
/// are the binary special case.
struct ExtendedVector {
    std::vector<Rational> x;
    std::vector<Rational> y;

    static ExtendedVector zeros(const Graph& g) {
        ExtendedVector ev;
        ev.x.assign(g.num_vertices(), Rational(0));
        ev.y.assign(g.num_edges(), Rational(0));
        return ev;
    }

    bool matches(const Graph& g) const {
        return static_cast<int>(x.size()) == g.num_vertices() &&
               static_cast<int>(y.size()) == g.num_edges();
    }

    bool is_integral() const;
    bool is_binary() const;

    // x(V) - y(E); equals 1 for every incidence vector of an induced tree.
    Rational vertex_sum_minus_edge_sum() const;

    ExtendedVector& add_scaled(const ExtendedVector& other, const Rational& factor);

    bool operator==(const ExtendedVector& other) const = default;
};

// Binary vector with x_v = 1 iff v in W and y_e = 1 iff both endpoints in W.
ExtendedVector incidence_vector(const Graph& g, const std::vector<int>& W);

}  // namespace chordalpoly
