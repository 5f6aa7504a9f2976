#include "psn/constructions/minkowski.hpp"

#include <set>
#include <string>

namespace psn::cons {

using exact::RatMatrix;
using exact::SolveStatus;

void check_index_sets(const comb::ProductShape& shape, const IndexSets& sets) {
    if (static_cast<int>(sets.size()) != shape.r()) throw std::invalid_argument("index sets: one list per factor required");
    std::set<Rational> seen;
    for (int i = 0; i < shape.r(); ++i) {
        const auto& s = sets[static_cast<std::size_t>(i)];
        if (static_cast<int>(s.size()) != shape.part(i) + 1) throw std::invalid_argument("index sets: list " + std::to_string(i) + " needs n_i+1 entries");
        for (const auto& a : s)
            if (!seen.insert(a).second) throw std::invalid_argument("index sets: lists overlap or repeat a value");
    }
}

namespace {

Rational label_value(const IndexSets& sets, std::size_t i, int j) { return sets[i][static_cast<std::size_t>(j)]; }

Polynomial squared_roots(const std::vector<Rational>& roots) {
    Polynomial p = Polynomial::from_roots(roots);
    return p * p;
}

std::vector<Rational> face_values(const IndexSets& sets, const comb::ProductFace& face, std::size_t i) {
    std::vector<Rational> out;
    for (int j : face.parts().block_elements(i)) out.push_back(sets[i][static_cast<std::size_t>(j)]);
    return out;
}

} // namespace

hull::LabeledVPolytope minkowski_simple(int k, const comb::ProductShape& shape, const IndexSets& sets) {
    check_index_sets(shape, sets);
    const int D = 2 * k + 2 * shape.r();
    hull::LabeledVPolytope p(static_cast<std::size_t>(D));
    for (const auto& a : shape.vertices()) {
        RatVector v(static_cast<std::size_t>(D));
        for (std::size_t i = 0; i < a.size(); ++i) v = exact::add(v, moment_curve(label_value(sets, i, a[i]), D));
        p.add(a, std::move(v));
    }
    return p;
}

hull::FaceCertificate minkowski_face_certificate_simple(int k, const comb::ProductShape& shape, const IndexSets& sets,
                                                        const comb::ProductFace& face) {
    check_index_sets(shape, sets);
    const int D = 2 * k + 2 * shape.r();
    Polynomial f(Rational(1));
    for (std::size_t i = 0; i < sets.size(); ++i) f = f * squared_roots(face_values(sets, face, i));
    if (f.degree() > D) throw std::invalid_argument("minkowski_face_certificate_simple: face dimension exceeds k");
    RatVector normal(static_cast<std::size_t>(D));
    for (int j = 1; j <= D; ++j) normal[static_cast<std::size_t>(j - 1)] = -f.coeff(static_cast<std::size_t>(j));
    hull::FaceCertificate c{std::move(normal), shape.r() * f.coeff(0), {}};
    auto pts = minkowski_simple(k, shape, sets);
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (face.contains(pts.label(i))) c.contact.push_back(i);
    return c;
}

QSystemResult solve_Q_system(int k, const std::vector<std::vector<Rational>>& blocks) {
    const std::size_t r = blocks.size();
    if (r == 0) throw std::invalid_argument("solve_Q_system: no blocks");
    int excess = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("solve_Q_system: empty block");
        excess += static_cast<int>(b.size()) - 1;
    }
    if (excess != k) throw std::invalid_argument("solve_Q_system: face dimension must equal k");
    const int top = 2 * k + 2;
    std::vector<Polynomial> P;
    std::vector<int> qdeg;
    std::vector<std::size_t> offset;
    std::size_t unknowns = 0;
    for (const auto& b : blocks) {
        P.push_back(squared_roots(b));
        qdeg.push_back(top - 2 * static_cast<int>(b.size()));
        offset.push_back(unknowns);
        unknowns += static_cast<std::size_t>(qdeg.back());
    }
    // Coefficient of t^j in Q_i P_i: Σ_l q_{i,l} P_i[j−l] plus the monic term P_i[j−deg Q_i].
    auto row_for = [&](std::size_t i, int j, RatVector& row, Rational& constant, const Rational& sign) {
        for (int l = 0; l < qdeg[i]; ++l)
            if (j - l >= 0) row[offset[i] + static_cast<std::size_t>(l)] += sign * P[i].coeff(static_cast<std::size_t>(j - l));
        if (j - qdeg[i] >= 0) constant += sign * P[i].coeff(static_cast<std::size_t>(j - qdeg[i]));
    };
    std::vector<RatVector> rows;
    RatVector rhs;
    for (std::size_t i = 1; i < r; ++i)
        for (int j = 2; j <= top - 1; ++j) {
            RatVector row(unknowns);
            Rational constant = 0;
            row_for(i, j, row, constant, 1);
            row_for(0, j, row, constant, -1);
            rows.push_back(std::move(row));
            rhs.push_back(-constant);
        }
    RatVector sol;
    if (unknowns > 0) {
        auto res = exact::solve_linear_system(RatMatrix::from_rows(rows), rhs);
        if (res.status != SolveStatus::Unique) return {res.status, {}, {}};
        sol = std::move(res.solution);
    }
    QSystemResult out{SolveStatus::Unique, {}, {}};
    std::vector<Polynomial> Q;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Rational> c(static_cast<std::size_t>(qdeg[i]) + 1);
        for (int l = 0; l < qdeg[i]; ++l) c[static_cast<std::size_t>(l)] = sol[offset[i] + static_cast<std::size_t>(l)];
        c[static_cast<std::size_t>(qdeg[i])] = 1;
        Q.emplace_back(std::move(c));
    }
    out.f = Q[0] * P[0];
    for (std::size_t i = 0; i < r; ++i) {
        Polynomial diff = out.f - Q[i] * P[i];
        if (diff.degree() > 1) throw std::logic_error("solve_Q_system: residual has degree above one");
        out.blocks.push_back({Q[i], diff.coeff(1), diff.coeff(0)});
    }
    return out;
}

IndexSets clustered_index_sets(const comb::ProductShape& shape, const std::vector<Rational>& anchors, const Rational& spread) {
    if (static_cast<int>(anchors.size()) != shape.r()) throw std::invalid_argument("clustered_index_sets: one anchor per factor required");
    IndexSets sets;
    for (int i = 0; i < shape.r(); ++i) {
        std::vector<Rational> s;
        for (int j = 0; j <= shape.part(i); ++j) s.push_back(anchors[static_cast<std::size_t>(i)] + spread * j / shape.part(i));
        sets.push_back(std::move(s));
    }
    return sets;
}

hull::LabeledVPolytope minkowski_tight_points(int k, const comb::ProductShape& shape, const IndexSets& sets) {
    check_index_sets(shape, sets);
    const int r = shape.r();
    hull::LabeledVPolytope p(static_cast<std::size_t>(2 * k + r + 1));
    for (const auto& a : shape.vertices()) {
        RatVector v;
        for (std::size_t i = 0; i < a.size(); ++i) v.push_back(label_value(sets, i, a[i]));
        RatVector sums(static_cast<std::size_t>(2 * k + 1));
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto mc = moment_curve(label_value(sets, i, a[i]), 2 * k + 2);
            for (std::size_t j = 1; j < mc.size(); ++j) sums[j - 1] += mc[j];
        }
        v.insert(v.end(), sums.begin(), sums.end());
        p.add(a, std::move(v));
    }
    return p;
}

std::optional<MinkowskiCertificate> minkowski_tight_certificate(int k, const comb::ProductShape& shape, const IndexSets& sets,
                                                                const comb::ProductFace& face) {
    std::vector<std::vector<Rational>> blocks;
    for (std::size_t i = 0; i < sets.size(); ++i) blocks.push_back(face_values(sets, face, i));
    auto sys = solve_Q_system(k, blocks);
    if (sys.status != SolveStatus::Unique) return std::nullopt;
    MinkowskiCertificate cert{face, sys, {}, 0, {}};
    bool positive = true;
    for (const auto& b : sys.blocks) {
        auto v = exact::poly_positivity(b.q);
        cert.positivity.push_back(v);
        if (v != exact::Positivity::PositiveEverywhere) positive = false;
    }
    if (!positive) return std::nullopt;
    const int r = shape.r();
    const Rational c1 = sys.f.coeff(1);
    for (const auto& b : sys.blocks) cert.normal.push_back(b.s - c1);
    for (int j = 2; j <= 2 * k + 2; ++j) cert.normal.push_back(-sys.f.coeff(static_cast<std::size_t>(j)));
    cert.offset = r * sys.f.coeff(0);
    for (const auto& b : sys.blocks) cert.offset -= b.r;
    return cert;
}

hull::FaceCertificate minkowski_tight_vertex_certificate(int k, const comb::ProductShape& shape, const IndexSets& sets,
                                                         const comb::Label& label) {
    RatVector normal(static_cast<std::size_t>(2 * k + shape.r() + 1));
    Rational offset = 0;
    for (std::size_t i = 0; i < label.size(); ++i) {
        Rational a = label_value(sets, i, label[i]);
        normal[i] = 2 * a;
        offset += a * a;
    }
    normal[label.size()] = -1;
    auto pts = minkowski_tight_points(k, shape, sets);
    return {std::move(normal), offset, {*pts.index_of(label)}};
}

MinkowskiResult minkowski_tight(const MinkowskiSpec& spec) {
    const auto& shape = spec.shape;
    if (spec.k < 0 || spec.k > shape.n()) throw std::invalid_argument("minkowski_tight: k out of range");
    if (spec.spread <= 0) throw std::invalid_argument("minkowski_tight: spread must be positive");
    std::vector<Rational> anchors = spec.anchors;
    if (anchors.empty())
        for (int i = 1; i <= shape.r(); ++i) anchors.emplace_back(i * 1000000);
    auto faces = comb::enumerate_k_faces(shape, spec.k);
    Rational spread = spec.spread;
    std::string last_failure;
    for (int attempt = 1; attempt <= spec.retry_cap + 1; ++attempt, spread /= 2) {
        IndexSets sets = clustered_index_sets(shape, anchors, spread);
        check_index_sets(shape, sets);
        auto pts = minkowski_tight_points(spec.k, shape, sets);
        std::vector<MinkowskiCertificate> certs;
        bool ok = true;
        for (const auto& f : faces) {
            auto c = minkowski_tight_certificate(spec.k, shape, sets, f);
            if (c) {
                hull::FaceCertificate fc{c->normal, c->offset, pts.indices_of(f.vertices())};
                if (!hull::validate_certificate(pts, fc)) c.reset();
            }
            if (!c) {
                ok = false;
                last_failure = f.to_string();
                break;
            }
            certs.push_back(std::move(*c));
        }
        if (ok) return {std::move(pts), std::move(sets), spread, attempt, std::move(certs)};
    }
    throw ConstructionFailed("minkowski_tight: retry cap exceeded; last failing face " + last_failure);
}

} // namespace psn::cons
