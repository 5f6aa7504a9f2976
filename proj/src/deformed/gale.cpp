#include "psn/deformed/gale.hpp"

#include "psn/constructions/cyclic.hpp"

namespace psn::deformed {

std::vector<RatVector> gale_dual(const std::vector<RatVector>& vectors) {
    if (vectors.empty()) return {};
    auto vt = exact::RatMatrix::from_rows(vectors).transpose();
    auto basis = exact::nullspace(vt);
    std::vector<RatVector> out(vectors.size(), RatVector(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < vectors.size(); ++i) out[i][j] = basis[j][i];
    return out;
}

GaleConfig gale_transform(const hull::LabeledVPolytope& points) {
    if (hull::affine_dimension(points.points()) != static_cast<int>(points.ambient_dim()))
        throw hull::DegenerateInput("gale_transform: points do not affinely span");
    std::vector<RatVector> lifted;
    for (const auto& p : points.points()) {
        RatVector v{1};
        v.insert(v.end(), p.begin(), p.end());
        lifted.push_back(std::move(v));
    }
    GaleConfig g;
    g.vectors = gale_dual(lifted);
    g.codim = points.size() - points.ambient_dim() - 1;
    for (const auto& l : points.labels()) {
        std::string s;
        for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
        g.names.push_back("(" + s + ")");
    }
    return g;
}

bool linearly_equivalent(const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    std::size_t ra = exact::rank(a), rb = exact::rank(b);
    if (ra != rb) return false;
    std::vector<RatVector> joined;
    for (std::size_t i = 0; i < a.size(); ++i) {
        RatVector v = a[i];
        v.insert(v.end(), b[i].begin(), b[i].end());
        joined.push_back(std::move(v));
    }
    return exact::rank(joined) == ra;
}

GaleConfig neighborly_gale_family(const GaleFamilyRequest& req) {
    const std::size_t n_points = req.codim + req.extra + (req.star ? 1 : 0);
    GaleConfig g;
    g.codim = req.codim;
    if (n_points == 0) return g;
    if (n_points < req.codim + 1) throw GaleFamilyError("neighborly_gale_family: too few vectors for the codimension");
    const int dim = static_cast<int>(n_points - req.codim - 1);
    if (req.star && dim < static_cast<int>(req.extra))
        throw GaleFamilyError("neighborly_gale_family: the constrained vectors cannot lie on a facet");
    std::vector<Rational> params;
    for (std::size_t i = 1; i <= n_points; ++i) params.push_back(static_cast<long>(i));
    std::vector<RatVector> lifted;
    for (const auto& t : params) {
        RatVector v{1};
        auto m = cons::moment_curve(t, dim);
        v.insert(v.end(), m.begin(), m.end());
        lifted.push_back(std::move(v));
    }
    auto raw = gale_dual(lifted);
    // Basis slots: the codim vertices after the g's.
    std::vector<RatVector> slot_rows;
    for (std::size_t i = req.extra; i < req.extra + req.codim; ++i) slot_rows.push_back(raw[i]);
    exact::RatMatrix change;
    if (req.codim > 0) {
        auto b = exact::RatMatrix::from_rows(slot_rows);
        if (exact::rank(b) != req.codim) throw GaleFamilyError("neighborly_gale_family: basis slots are linearly dependent");
        change = exact::inverse(b);
    }
    auto transform = [&](const RatVector& v) {
        if (req.codim == 0) return RatVector{};
        return change.transpose().apply(v);
    };
    for (std::size_t i = 0; i < n_points; ++i) g.vectors.push_back(transform(raw[i]));
    for (std::size_t i = 0; i < req.extra; ++i) g.names.push_back("g" + std::to_string(i + 1));
    for (std::size_t i = 0; i < req.codim; ++i) g.names.push_back("e" + std::to_string(i + 1));
    if (req.star) {
        g.names.push_back("g*");
        for (const auto& x : g.vectors.back())
            if (sgn(x) >= 0) throw GaleFamilyError("neighborly_gale_family: g* is not strictly negative");
    }
    g.primal_dim = dim;
    g.primal_params = params;
    return g;
}

int primal_dimension(const GaleConfig& g) { return static_cast<int>(g.vectors.size()) - static_cast<int>(g.codim) - 1; }

std::size_t spanning_threshold(const GaleConfig& g) {
    int d = primal_dimension(g);
    return g.vectors.size() - static_cast<std::size_t>(d > 0 ? d / 2 : 0);
}

} // namespace psn::deformed
