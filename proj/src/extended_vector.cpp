#include "chordalpoly/extended_vector.hpp"

namespace chordalpoly {

bool ExtendedVector::is_integral() const {
    for (const auto& v : x)
        if (!is_integer(v)) return false;
    for (const auto& v : y)
        if (!is_integer(v)) return false;
    return true;
}

bool ExtendedVector::is_binary() const {
    for (const auto& v : x)
        if (v != 0 && v != 1) return false;
    for (const auto& v : y)
        if (v != 0 && v != 1) return false;
    return true;
}

Rational ExtendedVector::vertex_sum_minus_edge_sum() const {
    Rational total(0);
    for (const auto& v : x) total += v;
    for (const auto& v : y) total -= v;
    return total;
}

ExtendedVector& ExtendedVector::add_scaled(const ExtendedVector& other, const Rational& factor) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += factor * other.x[i];
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += factor * other.y[i];
    return *this;
}

ExtendedVector incidence_vector(const Graph& g, const std::vector<int>& W) {
    ExtendedVector ev = ExtendedVector::zeros(g);
    for (int v : W) {
        if (v < 0 || v >= g.num_vertices()) throw InputError("incidence vertex out of range");
        ev.x[v] = 1;
    }
    for (std::size_t i = 0; i < W.size(); ++i)
        for (std::size_t j = i + 1; j < W.size(); ++j) {
            int e = g.edge_index(W[i], W[j]);
            if (e != -1) ev.y[e] = 1;
        }
    return ev;
}

}  // namespace chordalpoly
