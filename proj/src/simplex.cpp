#include "chordalpoly/simplex.hpp"

#include <algorithm>

namespace chordalpoly {

namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

Rational dot(const Vec& a, const Vec& b) {
    Rational total(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) total += a[i] * b[i];
    return total;
}

struct Engine {
    int dim;
    const std::vector<DenseLp::Row>* rows;
    std::vector<int> basis;  // row index per basis position
    Mat inv;                 // inverse of the basis matrix (rows stacked)
    Vec z;                   // current vertex
    long iterations = 0;

    bool in_basis(int row) const {
        return std::find(basis.begin(), basis.end(), row) != basis.end();
    }

    void recompute_point() {
        z.assign(dim, Rational(0));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                const Rational& b = (*rows)[basis[j]].rhs;
                if (inv[i][j] != 0 && b != 0) z[i] += inv[i][j] * b;
            }
    }

    // Replace the basis row at position p by row k (product-form update).
    void pivot(int p, int k) {
        const Vec& ak = (*rows)[k].coeffs;
        Vec g(dim);
        for (int j = 0; j < dim; ++j) {
            Rational total(0);
            for (int i = 0; i < dim; ++i)
                if (ak[i] != 0 && inv[i][j] != 0) total += ak[i] * inv[i][j];
            g[j] = total;
        }
        if (g[p] == 0) throw TheoryViolation("simplex pivot on dependent row");
        Vec up(dim);
        for (int i = 0; i < dim; ++i) up[i] = inv[i][p];
        for (int i = 0; i < dim; ++i) {
            if (up[i] == 0) continue;
            Rational factor = up[i] / g[p];
            for (int j = 0; j < dim; ++j) {
                Rational delta = g[j];
                if (j == p) delta -= 1;
                if (delta != 0) inv[i][j] -= factor * delta;
            }
        }
        basis[p] = k;
        recompute_point();
        ++iterations;
    }

    // Maximize objective from the current feasible vertex. Returns false on
    // unbounded. Bland's rule: the improving basis row with the smallest row
    // index leaves; the blocking row with the smallest index enters.
    bool optimize(const Vec& objective) {
        const long pivot_cap = 1000000;
        for (;;) {
            if (iterations > pivot_cap)
                throw TheoryViolation("simplex exceeded the pivot safety cap");
            int leave_pos = -1;
            for (int j = 0; j < dim; ++j) {
                if ((*rows)[basis[j]].rel == Rel::Eq) continue;
                Rational mu(0);
                for (int i = 0; i < dim; ++i)
                    if (objective[i] != 0 && inv[i][j] != 0) mu += objective[i] * inv[i][j];
                if (mu < 0 && (leave_pos == -1 || basis[j] < basis[leave_pos])) leave_pos = j;
            }
            if (leave_pos == -1) return true;

            Vec dir(dim);  // u_p; movement is z - t * dir
            for (int i = 0; i < dim; ++i) dir[i] = inv[i][leave_pos];
            int enter = -1;
            Rational best_t(0);
            bool have_t = false;
            for (std::size_t k = 0; k < rows->size(); ++k) {
                if (in_basis(static_cast<int>(k))) continue;
                const auto& row = (*rows)[k];
                Rational rate = -dot(row.coeffs, dir);
                Rational slack = row.rhs - dot(row.coeffs, z);
                bool blocks;
                Rational t_max(0);
                if (row.rel == Rel::Eq) {
                    blocks = rate != 0;  // slack is zero and must stay zero
                } else {
                    blocks = rate > 0;
                    if (blocks) t_max = slack / rate;
                }
                if (!blocks) continue;
                if (!have_t || t_max < best_t) {
                    have_t = true;
                    best_t = t_max;
                    enter = static_cast<int>(k);
                }
            }
            if (!have_t) return false;  // improving ray, no blocker
            pivot(leave_pos, enter);
        }
    }
};

// Greedily select `dim` linearly independent rows (equalities first), and
// invert their matrix. Returns false when the row matrix is rank-deficient,
// i.e. the polyhedron has no vertices.
bool initial_basis(const std::vector<DenseLp::Row>& rows, int dim, std::vector<int>& basis,
                   Mat& inv) {
    std::vector<int> order;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].rel == Rel::Eq) order.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].rel != Rel::Eq) order.push_back(static_cast<int>(i));

    basis.clear();
    Mat reduced;           // row-echelon copies of the selected rows
    std::vector<int> pivot_col;
    for (int idx : order) {
        if (static_cast<int>(basis.size()) == dim) break;
        Vec r = rows[idx].coeffs;
        for (std::size_t j = 0; j < reduced.size(); ++j) {
            const Rational& lead = r[pivot_col[j]];
            if (lead != 0) {
                Rational factor = lead / reduced[j][pivot_col[j]];
                for (int c = 0; c < dim; ++c)
                    if (reduced[j][c] != 0) r[c] -= factor * reduced[j][c];
            }
        }
        int col = -1;
        for (int c = 0; c < dim; ++c)
            if (r[c] != 0) { col = c; break; }
        if (col == -1) continue;
        reduced.push_back(std::move(r));
        pivot_col.push_back(col);
        basis.push_back(idx);
    }
    if (static_cast<int>(basis.size()) != dim) return false;

    // Exact Gauss-Jordan inverse of the basis matrix.
    Mat a(dim, Vec(dim));
    for (int i = 0; i < dim; ++i) a[i] = rows[basis[i]].coeffs;
    inv.assign(dim, Vec(dim, Rational(0)));
    for (int i = 0; i < dim; ++i) inv[i][i] = 1;
    for (int col = 0; col < dim; ++col) {
        int piv = -1;
        for (int i = col; i < dim; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv == -1) throw TheoryViolation("independent row selection produced a singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (int c = 0; c < dim; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        for (int i = 0; i < dim; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (int c = 0; c < dim; ++c) {
                if (a[col][c] != 0) a[i][c] -= f * a[col][c];
                if (inv[col][c] != 0) inv[i][c] -= f * inv[col][c];
            }
        }
    }
    return true;
}

}  // namespace

DenseLpResult dense_simplex_max(const DenseLp& lp, const std::vector<Rational>& objective) {
    if (lp.dim <= 0) throw InputError("simplex: empty variable space");
    if (lp.rows.empty()) throw InputError("simplex: system has no rows");
    if (static_cast<int>(objective.size()) != lp.dim)
        throw InputError("simplex: objective dimension mismatch");
    for (const auto& row : lp.rows)
        if (static_cast<int>(row.coeffs.size()) != lp.dim)
            throw InputError("simplex: row dimension mismatch");

    std::vector<int> basis;
    Mat inv;
    if (!initial_basis(lp.rows, lp.dim, basis, inv))
        throw InputError("simplex: system is not pointed (row rank below dimension)");

    Engine engine;
    engine.dim = lp.dim;
    engine.rows = &lp.rows;
    engine.basis = basis;
    engine.inv = std::move(inv);
    engine.recompute_point();

    // Violations at the basic point decide whether a phase-1 dive is needed.
    bool feasible = true;
    std::vector<Rational> violation(lp.rows.size(), Rational(0));
    for (std::size_t k = 0; k < lp.rows.size(); ++k) {
        Rational excess = dot(lp.rows[k].coeffs, engine.z) - lp.rows[k].rhs;
        if (lp.rows[k].rel == Rel::Eq ? excess != 0 : excess > 0) {
            violation[k] = excess;
            feasible = false;
        }
    }

    long phase1_iters = 0;
    if (!feasible) {
        // Auxiliary LP in dimension dim+1: row i becomes a.z - v_i t <= b_i
        // (v_i the violation at the basic point), plus 0 <= t <= 1. The basic
        // point with t = 1 is a feasible vertex; minimizing t to zero lands
        // on a vertex of the original system, and min t > 0 certifies
        // infeasibility.
        DenseLp aux;
        aux.dim = lp.dim + 1;
        for (std::size_t k = 0; k < lp.rows.size(); ++k) {
            DenseLp::Row row;
            row.coeffs = lp.rows[k].coeffs;
            row.coeffs.push_back(-violation[k]);
            row.rel = lp.rows[k].rel;
            row.rhs = lp.rows[k].rhs;
            aux.rows.push_back(std::move(row));
        }
        DenseLp::Row t_low;  // -t <= 0
        t_low.coeffs.assign(aux.dim, Rational(0));
        t_low.coeffs[lp.dim] = -1;
        aux.rows.push_back(t_low);
        DenseLp::Row t_high;  // t <= 1
        t_high.coeffs.assign(aux.dim, Rational(0));
        t_high.coeffs[lp.dim] = 1;
        t_high.rhs = 1;
        aux.rows.push_back(t_high);

        Engine phase1;
        phase1.dim = aux.dim;
        phase1.rows = &aux.rows;
        phase1.basis = basis;  // the selected rows are tight with v = 0
        phase1.inv.assign(aux.dim, Vec(aux.dim, Rational(0)));
        for (int i = 0; i < lp.dim; ++i)
            for (int j = 0; j < lp.dim; ++j) phase1.inv[i][j] = engine.inv[i][j];
        phase1.inv[lp.dim][lp.dim] = 1;
        phase1.basis.push_back(static_cast<int>(aux.rows.size()) - 1);  // t <= 1
        phase1.recompute_point();

        Vec aux_obj(aux.dim, Rational(0));
        aux_obj[lp.dim] = -1;  // maximize -t
        if (!phase1.optimize(aux_obj))
            throw TheoryViolation("phase-1 auxiliary problem reported unbounded");
        phase1_iters = phase1.iterations;
        if (phase1.z[lp.dim] != 0) {
            DenseLpResult res;
            res.status = LpStatus::Infeasible;
            res.iterations = phase1_iters;
            return res;
        }
        // Rebuild a basis of original rows tight at the phase-1 vertex.
        std::vector<DenseLp::Row> tight;
        std::vector<int> tight_idx;
        for (std::size_t k = 0; k < lp.rows.size(); ++k) {
            Rational lhs(0);
            for (int i = 0; i < lp.dim; ++i)
                if (lp.rows[k].coeffs[i] != 0) lhs += lp.rows[k].coeffs[i] * phase1.z[i];
            if (lhs == lp.rows[k].rhs) {
                tight.push_back(lp.rows[k]);
                tight_idx.push_back(static_cast<int>(k));
            }
        }
        std::vector<int> sub_basis;
        Mat sub_inv;
        if (!initial_basis(tight, lp.dim, sub_basis, sub_inv))
            throw TheoryViolation("phase-1 vertex has too few independent tight rows");
        engine.basis.clear();
        for (int s : sub_basis) engine.basis.push_back(tight_idx[s]);
        engine.inv = std::move(sub_inv);
        engine.recompute_point();
    }

    Vec obj = objective;
    bool bounded = engine.optimize(obj);
    DenseLpResult res;
    res.iterations = phase1_iters + engine.iterations;
    if (!bounded) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    // Exactness check: a returned vertex satisfies every row, no tolerance.
    for (const auto& row : lp.rows) {
        Rational lhs = dot(row.coeffs, engine.z);
        bool ok = row.rel == Rel::Eq ? lhs == row.rhs : lhs <= row.rhs;
        if (!ok) throw TheoryViolation("simplex returned an infeasible point");
    }
    res.status = LpStatus::Optimal;
    res.point = engine.z;
    res.value = dot(obj, engine.z);
    return res;
}

LpResult simplex_max(const LinearSystem& sys, const ExtendedVector& objective) {
    const Graph& g = sys.graph();
    if (!objective.matches(g)) throw InputError("simplex_max: objective dimension mismatch");
    int n = g.num_vertices();
    DenseLp lp;
    lp.dim = sys.num_vars();
    for (const auto& row : sys.rows()) {
        DenseLp::Row dense;
        dense.coeffs.assign(lp.dim, Rational(0));
        for (const auto& [var, coef] : row.coeffs) dense.coeffs[var] = coef;
        dense.rel = row.rel;
        dense.rhs = row.rhs;
        lp.rows.push_back(std::move(dense));
    }
    std::vector<Rational> obj(lp.dim);
    for (int v = 0; v < n; ++v) obj[v] = objective.x[v];
    for (int e = 0; e < g.num_edges(); ++e) obj[n + e] = objective.y[e];

    DenseLpResult dres = dense_simplex_max(lp, obj);
    LpResult res;
    res.status = dres.status;
    res.iterations = dres.iterations;
    res.value = dres.value;
    if (dres.status == LpStatus::Optimal) {
        res.vertex = ExtendedVector::zeros(g);
        for (int v = 0; v < n; ++v) res.vertex.x[v] = dres.point[v];
        for (int e = 0; e < g.num_edges(); ++e) res.vertex.y[e] = dres.point[n + e];
    }
    return res;
}

long affine_rank(const std::vector<ExtendedVector>& points) {
    if (points.empty()) throw InputError("affine_rank: empty point list");
    auto flatten = [](const ExtendedVector& p) {
        Vec v = p.x;
        v.insert(v.end(), p.y.begin(), p.y.end());
        return v;
    };
    Vec base = flatten(points.front());
    Mat reduced;
    std::vector<std::size_t> pivot_col;
    for (std::size_t i = 1; i < points.size(); ++i) {
        Vec r = flatten(points[i]);
        for (std::size_t c = 0; c < r.size(); ++c) r[c] -= base[c];
        for (std::size_t j = 0; j < reduced.size(); ++j) {
            const Rational& lead = r[pivot_col[j]];
            if (lead != 0) {
                Rational factor = lead / reduced[j][pivot_col[j]];
                for (std::size_t c = 0; c < r.size(); ++c)
                    if (reduced[j][c] != 0) r[c] -= factor * reduced[j][c];
            }
        }
        std::size_t col = r.size();
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) { col = c; break; }
        if (col == r.size()) continue;
        reduced.push_back(std::move(r));
        pivot_col.push_back(col);
    }
    return static_cast<long>(reduced.size());
}

}  // namespace chordalpoly
