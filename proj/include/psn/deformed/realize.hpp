#pragma once

#include "psn/comb/product.hpp"
#include "psn/deformed/plan.hpp"
#include "psn/hull/verify.hpp"

#include <optional>
#include <string>

namespace psn::deformed {

/// The deformed matrix A~ of a product-of-simplices plan: block-diagonal simplex matrices, basis rows left of
/// column d scaled by M, and the last n − d entries of every good row replaced by its Gale vector.
exact::RatMatrix deformed_matrix(const DeformedPlan& plan, const Rational& big_m);

/// Right-hand side 2^{−j·i} on the rows of factor i.
RatVector deformed_rhs(const DeformedPlan& plan, int j);

/// Vertex of {A~x ≤ b} for every product label, or nullopt unless each label's n facets meet in a single point
/// that satisfies every other inequality strictly. When all labels succeed the polytope is combinatorially the product:
/// every edge leaving a vertex ends at another labeled vertex, so there are no further vertices.
std::optional<hull::LabeledVPolytope> deformed_vertices(const DeformedPlan& plan, const comb::ProductShape& shape,
                                                        const exact::RatMatrix& a, const RatVector& b);

struct Realization {
    bool success = false;
    int exponent = 0;                       // j with ε = 2^{−j}, M = 2^j
    std::optional<hull::LabeledVPolytope> lifted;     // vertices of P~ in R^n
    std::optional<hull::LabeledVPolytope> projected;  // first d coordinates
    hull::SkeletonReport report;
    std::string note;
};

/// Best-effort realization: escalates j = 1..cap until P~ is combinatorially the product and its projection
/// passes verify_k_skeleton at k. Returns success = false (BEST_EFFORT_FAIL) after the cap.
Realization realize_small(const DeformedPlan& plan, const comb::ProductShape& shape, int k, int cap = 40);

} // namespace psn::deformed
