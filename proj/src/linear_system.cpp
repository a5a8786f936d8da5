#include "chordalpoly/linear_system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace chordalpoly {

std::string RowTag::to_string() const {
    auto set_str = [](const std::vector<int>& verts) {
        std::string s = "{";
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(verts[i] + 1);
        }
        return s + "}";
    };
    switch (kind) {
        case Kind::TreeClique:
            return "TreeClique(v=" + std::to_string(vertex + 1) + ", K=" + set_str(clique) + ")";
        case Kind::PathClique:
            return "PathClique(w=" + std::to_string(vertex + 1) + ", K=" + set_str(clique) + ")";
        case Kind::NonNegVertex:
            return "NonNegVertex(" + std::to_string(vertex + 1) + ")";
        case Kind::NonNegEdge:
            return "NonNegEdge(e" + std::to_string(edge) + ")";
        case Kind::Hyperplane:
            return "Hyperplane";
    }
    return "?";
}

Rational LinearRow::eval(const ExtendedVector& point, const Graph& g) const {
    int n = g.num_vertices();
    Rational total(0);
    for (const auto& [var, coef] : coeffs)
        total += coef * (var < n ? point.x[var] : point.y[var - n]);
    return total;
}

bool LinearRow::satisfied(const ExtendedVector& point, const Graph& g) const {
    Rational lhs = eval(point, g);
    return rel == Rel::Eq ? lhs == rhs : lhs <= rhs;
}

namespace {

// Canonical form for duplicate detection: scale so the coefficients are
// coprime integers; equalities additionally get their first coefficient made
// positive (inequalities may only be scaled by positive factors).
std::string canonical_key(const LinearRow& row) {
    Integer den_lcm(1), num_gcd(0);
    for (const auto& [var, coef] : row.coeffs) {
        (void)var;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coef.get_den().get_mpz_t());
    }
    std::vector<std::pair<int, Integer>> scaled;
    for (const auto& [var, coef] : row.coeffs) {
        Integer c = coef.get_num() * (den_lcm / coef.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_mpz_t());
        scaled.push_back({var, c});
    }
    Rational rhs = row.rhs * Rational(den_lcm);
    if (num_gcd != 0) {
        for (auto& [var, c] : scaled) c /= num_gcd;
        rhs = make_rational(rhs.get_num(), rhs.get_den() * num_gcd);
    }
    bool flip = row.rel == Rel::Eq && !scaled.empty() && scaled.front().second < 0;
    std::ostringstream key;
    key << (row.rel == Rel::Eq ? "=" : "<");
    for (const auto& [var, c] : scaled)
        key << " " << var << ":" << (flip ? Integer(-c) : c).get_str();
    key << " | " << rational_to_string(flip ? Rational(-rhs) : rhs);
    return key.str();
}

}  // namespace

bool LinearSystem::add_row(LinearRow row) {
    std::sort(row.coeffs.begin(), row.coeffs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::erase_if(row.coeffs, [](const auto& t) { return t.second == 0; });
    if (row.coeffs.empty()) throw InputError("row with no nonzero coefficients");
    std::string key = canonical_key(row);
    if (std::find(keys_.begin(), keys_.end(), key) != keys_.end()) return false;
    keys_.push_back(std::move(key));
    rows_.push_back(std::move(row));
    return true;
}

MembershipResult check_membership(const LinearSystem& sys, const ExtendedVector& point) {
    if (!point.matches(sys.graph())) throw InputError("check_membership: dimension mismatch");
    MembershipResult res;
    for (const auto& row : sys.rows())
        if (!row.satisfied(point, sys.graph())) {
            res.ok = false;
            res.violated.push_back(row.tag);
        }
    return res;
}

std::string var_name(const Graph& g, int var) {
    int n = g.num_vertices();
    if (var < n) return "x" + std::to_string(var + 1);
    auto [u, v] = g.edge(var - n);
    return "y" + std::to_string(u + 1) + "_" + std::to_string(v + 1);
}

std::string to_lp_text(const LinearSystem& sys) {
    std::ostringstream out;
    out << "# rows: " << sys.rows().size() << "\n";
    int idx = 0;
    for (const auto& row : sys.rows()) {
        out << "# r" << idx++ << ": " << row.tag.to_string() << "\n";
        bool first = true;
        for (const auto& [var, coef] : row.coeffs) {
            if (!first) out << " ";
            first = false;
            out << (coef >= 0 ? "+" : "-") << rational_to_string(abs(coef)) << "*"
                << var_name(sys.graph(), var);
        }
        out << " " << (row.rel == Rel::Eq ? "=" : "<=") << " " << rational_to_string(row.rhs)
            << "\n";
    }
    return out.str();
}

LinearRow nonneg_vertex_row(int v) {
    LinearRow row;
    row.coeffs = {{v, Rational(-1)}};
    row.rel = Rel::LessEq;
    row.rhs = 0;
    row.tag = {RowTag::Kind::NonNegVertex, v, -1, {}};
    return row;
}

LinearRow nonneg_edge_row(const Graph& g, int e) {
    LinearRow row;
    row.coeffs = {{g.num_vertices() + e, Rational(-1)}};
    row.rel = Rel::LessEq;
    row.rhs = 0;
    row.tag = {RowTag::Kind::NonNegEdge, -1, e, {}};
    return row;
}

LinearRow hyperplane_row(const Graph& g) {
    LinearRow row;
    for (int v = 0; v < g.num_vertices(); ++v) row.coeffs.push_back({v, Rational(1)});
    for (int e = 0; e < g.num_edges(); ++e)
        row.coeffs.push_back({g.num_vertices() + e, Rational(-1)});
    row.rel = Rel::Eq;
    row.rhs = 1;
    row.tag = {RowTag::Kind::Hyperplane, -1, -1, {}};
    return row;
}

}  // namespace chordalpoly
