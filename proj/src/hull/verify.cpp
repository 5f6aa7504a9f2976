#include "psn/hull/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace psn::hull {

namespace {

void require_product_labels(const LabeledVPolytope& p, const comb::ProductShape& shape) {
    auto expected = shape.vertices();
    if (expected.size() != p.size()) throw LabelMismatch("number of labels differs from the number of product vertices");
    for (const auto& l : expected)
        if (!p.index_of(l)) throw LabelMismatch("missing product vertex label");
}

} // namespace

SkeletonReport verify_k_skeleton(const LabeledVPolytope& p, const comb::ProductShape& shape, int k, bool projection_of_product) {
    if (k < 0 || k > shape.n()) throw std::out_of_range("verify_k_skeleton: k out of range");
    require_product_labels(p, shape);
    SkeletonReport rep;
    rep.verified_k = k;
    rep.scope = projection_of_product ? SkeletonScope::Equivalence : SkeletonScope::Containment;
    for (std::size_t i = 0; i < p.size(); ++i) {
        ++rep.faces_checked;
        if (!certify_face(p, std::vector<std::size_t>{i})) rep.non_vertex_labels.push_back(p.label(i));
    }
    const int full_dim = affine_dimension(p.points());
    for (const auto& f : comb::enumerate_k_faces(shape, k)) {
        ++rep.faces_checked;
        auto idx = p.indices_of(f.vertices());
        bool ok;
        if (idx.size() == p.size()) ok = full_dim == f.dim();
        else ok = certify_face(p, idx).has_value() && affine_dimension(p, idx) == f.dim();
        if (!ok) rep.missing_faces.push_back(f);
    }
    return rep;
}

SkeletonReport verify_k_skeleton_exhaustive(const LabeledVPolytope& p_in, const comb::ProductShape& shape, int k) {
    if (k < 0 || k > shape.n()) throw std::out_of_range("verify_k_skeleton_exhaustive: k out of range");
    require_product_labels(p_in, shape);
    LabeledVPolytope p = restrict_to_affine_hull(p_in);
    SkeletonReport rep;
    rep.verified_k = k;
    rep.scope = SkeletonScope::Exhaustive;
    std::map<std::vector<std::size_t>, int> lattice;
    for (const auto& f : face_lattice(p)) {
        ++rep.faces_checked;
        if (f.dim <= k) lattice.emplace(f.contact, f.dim);
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto it = lattice.find({i});
        if (it == lattice.end() || it->second != 0) rep.non_vertex_labels.push_back(p.label(i));
    }
    std::set<std::vector<std::size_t>> matched;
    for (int j = 0; j <= k; ++j) {
        for (const auto& f : comb::enumerate_k_faces(shape, j)) {
            auto idx = p.indices_of(f.vertices());
            auto it = lattice.find(idx);
            if (it == lattice.end() || it->second != j) rep.missing_faces.push_back(f);
            else matched.insert(idx);
        }
    }
    for (const auto& [contact, dim] : lattice) {
        if (matched.count(contact)) continue;
        std::vector<Label> labels;
        for (auto i : contact) labels.push_back(p.label(i));
        rep.unexpected_faces.push_back(std::move(labels));
    }
    return rep;
}

LabeledVPolytope canonical_product(const comb::ProductShape& shape) {
    LabeledVPolytope p(static_cast<std::size_t>(shape.n()));
    for (const auto& a : shape.vertices()) {
        RatVector v(static_cast<std::size_t>(shape.n()));
        int off = 0;
        for (int i = 0; i < shape.r(); ++i) {
            if (a[static_cast<std::size_t>(i)] > 0) v[static_cast<std::size_t>(off + a[static_cast<std::size_t>(i)] - 1)] = 1;
            off += shape.part(i);
        }
        p.add(a, std::move(v));
    }
    return p;
}

std::string to_string(SkeletonScope s) {
    switch (s) {
    case SkeletonScope::Equivalence: return "k-skeleton equivalence verified";
    case SkeletonScope::Containment: return "k-skeleton containment verified";
    case SkeletonScope::Exhaustive: return "k-skeleton equivalence verified by face enumeration";
    }
    return "?";
}

} // namespace psn::hull
