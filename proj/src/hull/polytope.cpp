#include "psn/hull/polytope.hpp"

#include "psn/exact/lp.hpp"
#include "psn/exact/matrix.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace psn::hull {

using exact::LinearConstraint;
using exact::RatMatrix;
using exact::Relation;

void LabeledVPolytope::add(Label label, RatVector point) {
    if (point.size() != dim_) throw exact::DimensionMismatch("point has wrong ambient dimension");
    if (index_.count(label)) throw std::invalid_argument("duplicate label");
    index_.emplace(label, labels_.size());
    labels_.push_back(std::move(label));
    points_.push_back(std::move(point));
}

std::optional<std::size_t> LabeledVPolytope::index_of(const Label& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> LabeledVPolytope::indices_of(const std::vector<Label>& labels) const {
    std::vector<std::size_t> out;
    for (const auto& l : labels) {
        auto i = index_of(l);
        if (!i) throw UnknownLabel("unknown label");
        out.push_back(*i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool validate_certificate(const LabeledVPolytope& p, const FaceCertificate& c) {
    if (c.normal.size() != p.ambient_dim()) return false;
    std::size_t next = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        bool on = next < c.contact.size() && c.contact[next] == i;
        if (on) ++next;
        Rational v = exact::dot(c.normal, p.point(i));
        if (on ? v != c.offset : v >= c.offset) return false;
    }
    return next == c.contact.size();
}

int affine_dimension(const std::vector<RatVector>& points) {
    if (points.empty()) return -1;
    std::vector<RatVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(exact::sub(points[i], points[0]));
    return static_cast<int>(exact::rank(diffs));
}

int affine_dimension(const LabeledVPolytope& p, const std::vector<std::size_t>& subset) {
    std::vector<RatVector> pts;
    for (auto i : subset) pts.push_back(p.point(i));
    return affine_dimension(pts);
}

LabeledVPolytope restrict_to_affine_hull(const LabeledVPolytope& p) {
    if (p.size() == 0) return LabeledVPolytope(0);
    std::vector<RatVector> diffs;
    for (std::size_t i = 1; i < p.size(); ++i) diffs.push_back(exact::sub(p.point(i), p.point(0)));
    std::vector<std::size_t> pivots;
    if (!diffs.empty()) exact::rref(RatMatrix::from_rows(diffs), &pivots);
    LabeledVPolytope q(pivots.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        RatVector v;
        for (auto c : pivots) v.push_back(p.point(i)[c]);
        q.add(p.label(i), std::move(v));
    }
    return q;
}

namespace {

void require_full_dimensional(const LabeledVPolytope& p) {
    if (affine_dimension(p.points()) != static_cast<int>(p.ambient_dim()))
        throw DegenerateInput("points do not affinely span the ambient space");
}

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

std::vector<FaceCertificate> enumerate_facets(const LabeledVPolytope& p) {
    require_full_dimensional(p);
    const std::size_t d = p.ambient_dim(), N = p.size();
    std::vector<FaceCertificate> facets;
    if (d == 0) return facets;
    std::vector<std::size_t> subset;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (subset.size() == d) {
            for (const auto& f : facets)
                if (is_subset(subset, f.contact)) return;
            std::vector<RatVector> diffs;
            for (std::size_t j = 1; j < d; ++j) diffs.push_back(exact::sub(p.point(subset[j]), p.point(subset[0])));
            std::vector<RatVector> ns;
            if (diffs.empty()) ns = {RatVector{Rational(1)}};
            else ns = exact::nullspace(RatMatrix::from_rows(diffs));
            if (ns.size() != 1) return;
            RatVector c = exact::primitive_integer(ns[0]);
            Rational b = exact::dot(c, p.point(subset[0]));
            bool below = false, above = false;
            std::vector<std::size_t> contact;
            for (std::size_t i = 0; i < N; ++i) {
                Rational v = exact::dot(c, p.point(i));
                if (v == b) contact.push_back(i);
                else if (v < b) below = true;
                else above = true;
                if (below && above) return;
            }
            if (above) {
                for (auto& x : c) x = -x;
                b = -b;
            }
            facets.push_back({std::move(c), std::move(b), std::move(contact)});
            return;
        }
        for (std::size_t i = start; i + (d - subset.size()) <= N; ++i) {
            subset.push_back(i);
            rec(i + 1);
            subset.pop_back();
        }
    };
    rec(0);
    std::sort(facets.begin(), facets.end(), [](const auto& a, const auto& b) { return a.contact < b.contact; });
    return facets;
}

std::optional<FaceCertificate> certify_face(const LabeledVPolytope& p, const std::vector<std::size_t>& contact_in) {
    if (contact_in.empty()) throw std::invalid_argument("certify_face: empty contact set");
    std::vector<std::size_t> contact = contact_in;
    std::sort(contact.begin(), contact.end());
    contact.erase(std::unique(contact.begin(), contact.end()), contact.end());
    for (auto i : contact)
        if (i >= p.size()) throw UnknownLabel("certify_face: index out of range");
    if (contact.size() == p.size()) return std::nullopt;
    const std::size_t d = p.ambient_dim();
    std::vector<LinearConstraint> cons;
    std::size_t next = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        RatVector a(d + 1);
        for (std::size_t j = 0; j < d; ++j) a[j] = p.point(i)[j];
        a[d] = -1;
        bool on = next < contact.size() && contact[next] == i;
        if (on) ++next;
        if (on) cons.push_back({std::move(a), Relation::Equal, 0});
        else cons.push_back({std::move(a), Relation::LessEqual, -1});
    }
    auto res = exact::lp_feasible(cons, d + 1);
    if (!res.feasible()) return std::nullopt;
    RatVector w = exact::primitive_integer(res.witness);
    FaceCertificate cert{RatVector(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d)), w[d], contact};
    if (!validate_certificate(p, cert)) throw std::logic_error("certify_face: certificate failed validation");
    return cert;
}

std::optional<FaceCertificate> certify_face(const LabeledVPolytope& p, const std::vector<Label>& contact) {
    return certify_face(p, p.indices_of(contact));
}

std::vector<Face> face_lattice(const LabeledVPolytope& p) {
    auto facets = enumerate_facets(p);
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> queue;
    std::vector<std::size_t> all(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) all[i] = i;
    seen.insert(all);
    for (const auto& f : facets)
        if (seen.insert(f.contact).second) queue.push_back(f.contact);
    while (!queue.empty()) {
        auto cur = std::move(queue.back());
        queue.pop_back();
        for (const auto& f : facets) {
            std::vector<std::size_t> inter;
            std::set_intersection(cur.begin(), cur.end(), f.contact.begin(), f.contact.end(), std::back_inserter(inter));
            if (inter.empty() || inter == cur) continue;
            if (seen.insert(inter).second) queue.push_back(std::move(inter));
        }
    }
    std::vector<Face> faces;
    for (const auto& c : seen) faces.push_back({c, affine_dimension(p, c)});
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.contact < b.contact;
    });
    return faces;
}

bool strictly_preserved(const LabeledVPolytope& p, const std::vector<std::size_t>& contact, std::size_t d) {
    const std::size_t n = p.ambient_dim();
    if (d == 0 || d > n) throw std::invalid_argument("strictly_preserved: d must lie in (0, n]");
    if (!certify_face(p, contact)) throw std::invalid_argument("strictly_preserved: contact set is not a face");
    if (d == n) return true;
    std::vector<std::size_t> sorted = contact;
    std::sort(sorted.begin(), sorted.end());
    std::vector<RatVector> tau;
    for (const auto& f : enumerate_facets(p)) {
        if (!is_subset(sorted, f.contact)) continue;
        tau.emplace_back(f.normal.begin() + static_cast<std::ptrdiff_t>(d), f.normal.end());
    }
    return exact::positively_spanning(tau, n - d);
}

LabeledVPolytope project(const LabeledVPolytope& p, std::size_t d) {
    if (d > p.ambient_dim()) throw std::invalid_argument("project: target dimension too large");
    LabeledVPolytope q(d);
    for (std::size_t i = 0; i < p.size(); ++i)
        q.add(p.label(i), RatVector(p.point(i).begin(), p.point(i).begin() + static_cast<std::ptrdiff_t>(d)));
    return q;
}

bool strictly_preserved_direct(const LabeledVPolytope& p, const std::vector<std::size_t>& contact, std::size_t d) {
    LabeledVPolytope q = project(p, d);
    if (!certify_face(q, contact)) return false;
    return affine_dimension(q, contact) == affine_dimension(p, contact);
}

} // namespace psn::hull
