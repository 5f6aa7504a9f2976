#include "psn/exact/lp.hpp"

#include "psn/exact/matrix.hpp"

#include <stdexcept>

namespace psn::exact {

bool satisfies(const LinearConstraint& c, const RatVector& x) {
    Rational v = dot(c.a, x);
    switch (c.rel) {
    case Relation::LessEqual: return v <= c.b;
    case Relation::Equal: return v == c.b;
    case Relation::GreaterEqual: return v >= c.b;
    }
    return false;
}

namespace {

// Tableau for min Σ artificials subject to T x = rhs, x ≥ 0.
struct Tableau {
    std::size_t m, ncols;
    std::vector<std::vector<Rational>> rows; // each row: ncols coefficients then rhs
    std::vector<std::size_t> basis;
    std::vector<Rational> cost; // reduced costs, last entry = -objective

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j <= ncols; ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
        }
        if (cost[c] != 0) {
            Rational f = cost[c];
            for (std::size_t j = 0; j <= ncols; ++j)
                if (rows[r][j] != 0) cost[j] -= f * rows[r][j];
        }
        basis[r] = c;
    }
};

} // namespace

LpResult lp_feasible(const std::vector<LinearConstraint>& constraints, std::optional<std::size_t> dim) {
    std::size_t n;
    if (dim) {
        n = *dim;
    } else if (!constraints.empty()) {
        n = constraints[0].a.size();
    } else {
        throw DimensionMismatch("lp_feasible: dimension unknown for empty system");
    }
    for (const auto& c : constraints)
        if (c.a.size() != n) throw DimensionMismatch("lp_feasible: constraint dimension mismatch");

    const std::size_t m = constraints.size();
    if (m == 0) return {LpVerdict::Feasible, RatVector(n)};

    // Columns: x+ (n), x- (n), one slack per inequality, one artificial per row lacking a unit column.
    std::size_t nslack = 0;
    for (const auto& c : constraints)
        if (c.rel != Relation::Equal) ++nslack;

    std::vector<int> sign(m, 1);
    std::vector<long> slack_col(m, -1);
    std::vector<bool> needs_art(m, true);
    std::size_t next_slack = 2 * n;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        if (c.b < 0) sign[i] = -1;
        if (c.rel != Relation::Equal) {
            slack_col[i] = static_cast<long>(next_slack++);
            // slack coefficient: +1 for <=, -1 for >=, then multiplied by sign
            int coeff = (c.rel == Relation::LessEqual ? 1 : -1) * sign[i];
            if (coeff == 1) needs_art[i] = false;
        }
    }
    std::size_t nart = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (needs_art[i]) ++nart;

    Tableau t;
    t.m = m;
    t.ncols = 2 * n + nslack + nart;
    t.rows.assign(m, std::vector<Rational>(t.ncols + 1));
    t.basis.assign(m, 0);
    t.cost.assign(t.ncols + 1, 0);
    std::size_t next_art = 2 * n + nslack;
    const std::size_t first_art = next_art;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        auto& row = t.rows[i];
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = sign[i] * c.a[j];
            row[n + j] = -sign[i] * c.a[j];
        }
        if (slack_col[i] >= 0) row[static_cast<std::size_t>(slack_col[i])] = (c.rel == Relation::LessEqual ? 1 : -1) * sign[i];
        row[t.ncols] = sign[i] * c.b;
        if (needs_art[i]) {
            row[next_art] = 1;
            t.basis[i] = next_art++;
        } else {
            t.basis[i] = static_cast<std::size_t>(slack_col[i]);
        }
    }
    // Phase-one objective: minimise the sum of artificials; reduced costs = -(sum of artificial rows).
    for (std::size_t i = 0; i < m; ++i) {
        if (!needs_art[i]) continue;
        for (std::size_t j = 0; j <= t.ncols; ++j) t.cost[j] -= t.rows[i][j];
    }
    for (std::size_t j = first_art; j < t.ncols; ++j) t.cost[j] = 0;

    while (true) {
        std::size_t enter = t.ncols;
        for (std::size_t j = 0; j < t.ncols; ++j)
            if (t.cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == t.ncols) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t.rows[i][enter] <= 0) continue;
            Rational ratio = t.rows[i][t.ncols] / t.rows[i][enter];
            if (leave == m || ratio < best || (ratio == best && t.basis[i] < t.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw std::logic_error("lp_feasible: phase-one objective unbounded");
        t.pivot(leave, enter);
    }
    // Remaining objective value is -cost[ncols].
    if (t.cost[t.ncols] != 0) return {LpVerdict::Infeasible, {}};

    RatVector x(n);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t b = t.basis[i];
        if (b < n) x[b] += t.rows[i][t.ncols];
        else if (b < 2 * n) x[b - n] -= t.rows[i][t.ncols];
    }
    for (const auto& c : constraints)
        if (!satisfies(c, x)) throw std::logic_error("lp_feasible: witness check failed");
    return {LpVerdict::Feasible, std::move(x)};
}

bool positively_spanning(const std::vector<RatVector>& vectors, std::size_t dim) {
    if (dim == 0) return true;
    if (vectors.empty()) return false;
    for (const auto& v : vectors)
        if (v.size() != dim) throw DimensionMismatch("positively_spanning: dimension mismatch");
    if (rank(vectors) != dim) return false;
    const std::size_t N = vectors.size();
    std::vector<LinearConstraint> cons;
    for (std::size_t d = 0; d < dim; ++d) {
        RatVector a(N);
        for (std::size_t i = 0; i < N; ++i) a[i] = vectors[i][d];
        cons.push_back({std::move(a), Relation::Equal, 0});
    }
    for (std::size_t i = 0; i < N; ++i) {
        RatVector a(N);
        a[i] = 1;
        cons.push_back({std::move(a), Relation::GreaterEqual, 1});
    }
    return lp_feasible(cons, N).feasible();
}

} // namespace psn::exact
