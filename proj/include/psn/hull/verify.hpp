#pragma once

#include "psn/comb/product.hpp"
#include "psn/hull/polytope.hpp"

#include <string>
#include <vector>

namespace psn::hull {

enum class SkeletonScope {
    Equivalence, // input declared a projection of a combinatorial product
    Containment, // only containment of the product's k-skeleton is proven
    Exhaustive   // full face lattice compared against the product
};

struct SkeletonReport {
    int verified_k = 0;
    SkeletonScope scope = SkeletonScope::Containment;
    std::vector<comb::ProductFace> missing_faces;
    std::vector<Label> non_vertex_labels;
    /// Faces of P of dimension ≤ k with no matching product face (exhaustive mode only).
    std::vector<std::vector<Label>> unexpected_faces;
    std::size_t faces_checked = 0;
    bool pass() const { return missing_faces.empty() && non_vertex_labels.empty() && unexpected_faces.empty(); }
};

class LabelMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Certifies every label as a vertex and every k-face of the product as a face of P with exactly its labels,
/// of the right dimension. Throws LabelMismatch unless the labels are exactly the product vertices.
SkeletonReport verify_k_skeleton(const LabeledVPolytope& p, const comb::ProductShape& shape, int k, bool projection_of_product);

/// Compares all faces of P of dimension ≤ k with the faces of the product, by face-lattice enumeration.
SkeletonReport verify_k_skeleton_exhaustive(const LabeledVPolytope& p, const comb::ProductShape& shape, int k);

/// 0/1 coordinates of Δ_{n_1} × ... × Δ_{n_r} in R^n (vertex 0 of each simplex at the origin).
LabeledVPolytope canonical_product(const comb::ProductShape& shape);

std::string to_string(SkeletonScope s);

} // namespace psn::hull
