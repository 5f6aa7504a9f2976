#include "psn/deformed/realize.hpp"

#include "psn/exact/matrix.hpp"

#include <algorithm>

namespace psn::deformed {

namespace {

void require_simplices(const DeformedPlan& plan, const comb::ProductShape& shape) {
    if (static_cast<int>(plan.factors.size()) != shape.r()) throw std::invalid_argument("realize: factor count differs from the shape");
    for (int i = 0; i < shape.r(); ++i) {
        const auto& f = plan.factors[static_cast<std::size_t>(i)];
        if (f.n != shape.part(i) || f.m != f.n + 1) throw std::invalid_argument("realize: factors must be the simplices of the shape");
    }
}

} // namespace

exact::RatMatrix deformed_matrix(const DeformedPlan& plan, const Rational& big_m) {
    if (!plan.gale) throw PlanWithoutVectors("deformed_matrix: plan has no Gale vectors");
    exact::RatMatrix a(static_cast<std::size_t>(plan.m), static_cast<std::size_t>(plan.n));
    std::size_t row = 0;
    int col = 0;
    std::size_t idx = 0;
    for (int i = 0; i < static_cast<int>(plan.factors.size()); ++i) {
        const auto& f = plan.factors[static_cast<std::size_t>(i)];
        for (int j = 0; j < f.m; ++j, ++row, ++idx) {
            const auto& pr = plan.rows.at(idx);
            if (j == 0) {
                for (int c = 0; c < f.n; ++c) a(row, static_cast<std::size_t>(col + c)) = -1;
            } else {
                int diag = col + j - 1;
                a(row, static_cast<std::size_t>(diag)) = i == plan.t && diag < plan.d ? big_m : Rational(1);
            }
            if (pr.status == RowStatus::Good && pr.vector >= 0) {
                const auto& v = plan.gale->vectors[static_cast<std::size_t>(pr.vector)];
                for (int c = plan.d; c < plan.n; ++c) a(row, static_cast<std::size_t>(c)) = v[static_cast<std::size_t>(c - plan.d)];
            }
        }
        col += f.n;
    }
    return a;
}

RatVector deformed_rhs(const DeformedPlan& plan, int j) {
    RatVector b;
    Rational scale = 1;
    const Rational step = exact::ratio(1, exact::Integer(1) << static_cast<unsigned>(j));
    for (const auto& f : plan.factors) {
        for (int r = 0; r < f.m; ++r) b.push_back(scale);
        scale *= step;
    }
    return b;
}

std::optional<hull::LabeledVPolytope> deformed_vertices(const DeformedPlan& plan, const comb::ProductShape& shape,
                                                        const exact::RatMatrix& a, const RatVector& b) {
    std::vector<std::size_t> offset;
    std::size_t acc = 0;
    for (const auto& f : plan.factors) {
        offset.push_back(acc);
        acc += static_cast<std::size_t>(f.m);
    }
    hull::LabeledVPolytope out(static_cast<std::size_t>(plan.n));
    for (const auto& label : shape.vertices()) {
        std::vector<std::size_t> tight;
        for (int i = 0; i < shape.r(); ++i)
            for (int j = 0; j <= shape.part(i); ++j)
                if (j != label[static_cast<std::size_t>(i)]) tight.push_back(offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(facet_row(j)));
        std::vector<RatVector> rows;
        RatVector rhs;
        for (auto t : tight) {
            rows.push_back(a.row(t));
            rhs.push_back(b[t]);
        }
        auto sol = exact::solve_linear_system(exact::RatMatrix::from_rows(rows), rhs);
        if (sol.status != exact::SolveStatus::Unique) return std::nullopt;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (std::find(tight.begin(), tight.end(), r) != tight.end()) continue;
            if (!(exact::dot(a.row(r), sol.solution) < b[r])) return std::nullopt;
        }
        out.add(label, sol.solution);
    }
    return out;
}

Realization realize_small(const DeformedPlan& plan, const comb::ProductShape& shape, int k, int cap) {
    require_simplices(plan, shape);
    Realization res;
    if (!plan.gale) {
        res.note = "plan has no Gale vectors: " + plan.note;
        return res;
    }
    long points = 1;
    for (int p : shape.parts()) points *= p + 1;
    if (points > 30) {
        res.note = "more than 30 points";
        return res;
    }
    for (int j = 1; j <= cap; ++j) {
        res.exponent = j;
        auto a = deformed_matrix(plan, Rational(exact::Integer(1) << static_cast<unsigned>(j)));
        auto b = deformed_rhs(plan, j);
        auto verts = deformed_vertices(plan, shape, a, b);
        if (!verts) continue;
        auto proj = hull::project(*verts, static_cast<std::size_t>(plan.d));
        auto rep = hull::verify_k_skeleton(proj, shape, k, true);
        if (!rep.pass()) {
            res.report = rep;
            continue;
        }
        res.success = true;
        res.lifted = verts;
        res.projected = proj;
        res.report = rep;
        return res;
    }
    res.note = "escalation cap reached";
    return res;
}

} // namespace psn::deformed
