#pragma once

#include "psn/comb/product.hpp"
#include "psn/constructions/cyclic.hpp"
#include "psn/exact/matrix.hpp"
#include "psn/exact/polynomial.hpp"
#include "psn/hull/polytope.hpp"

#include <optional>
#include <vector>

namespace psn::cons {

using exact::Polynomial;

/// One list of parameters per factor; entry j of list i is the parameter of vertex j of Δ_{n_i}.
using IndexSets = std::vector<std::vector<Rational>>;

/// Throws std::invalid_argument unless |I_i| = n_i + 1 and the lists are pairwise disjoint with distinct entries.
void check_index_sets(const comb::ProductShape& shape, const IndexSets& sets);

/// v = (Σa_i, Σa_i², ..., Σa_i^{2k+2r}) for every label.
hull::LabeledVPolytope minkowski_simple(int k, const comb::ProductShape& shape, const IndexSets& sets);

/// Certificate from f(t) = Π_i Π_{a∈A_i} (t − a)² = Σ c_j t^j: normal −(c_1, ..., c_{2k+2r}), offset r·c_0.
hull::FaceCertificate minkowski_face_certificate_simple(int k, const comb::ProductShape& shape, const IndexSets& sets,
                                                        const comb::ProductFace& face);

struct QBlock {
    Polynomial q; // monic, degree 2k+2−2|A_i|
    Rational s, r;
};

struct QSystemResult {
    exact::SolveStatus status;
    Polynomial f;              // f_F, monic of degree 2k+2 (when unique)
    std::vector<QBlock> blocks; // one per factor (when unique)
};

/// Solves for monic Q_i with f_F = Q_i · Π_{a∈A_i}(t − a)² + s_i t + r_i for every i, taking f_F = Q_1·Π_{a∈A_1}(t−a)².
/// Blocks are multisets (repeated values allowed). Requires Σ(|A_i| − 1) = k.
QSystemResult solve_Q_system(int k, const std::vector<std::vector<Rational>>& blocks);

struct MinkowskiCertificate {
    comb::ProductFace face;
    QSystemResult system;
    RatVector normal; // (s_1−c_1, ..., s_r−c_1, −c_2, ..., −c_{2k+2})
    Rational offset;  // r·c_0 − Σ r_i
    std::vector<exact::Positivity> positivity;
};

struct MinkowskiSpec {
    int k;
    comb::ProductShape shape;
    std::vector<Rational> anchors; // empty = i·10^6 for i = 1..r
    Rational spread = 1;
    int retry_cap = 60;
};

struct MinkowskiResult {
    hull::LabeledVPolytope polytope;
    IndexSets index_sets;
    Rational spread;
    int attempts;
    std::vector<MinkowskiCertificate> certificates;
};

/// ā_i + spread·j/n_i for j = 0..n_i.
IndexSets clustered_index_sets(const comb::ProductShape& shape, const std::vector<Rational>& anchors, const Rational& spread);

/// w = (a_1, ..., a_r, Σa_i², ..., Σa_i^{2k+2}).
hull::LabeledVPolytope minkowski_tight_points(int k, const comb::ProductShape& shape, const IndexSets& sets);

/// Certificate for one face, or nullopt when the system is singular or some Q_i is not positive everywhere.
std::optional<MinkowskiCertificate> minkowski_tight_certificate(int k, const comb::ProductShape& shape, const IndexSets& sets,
                                                                const comb::ProductFace& face);

/// Vertex certificate with normal (2a_1, ..., 2a_r, −1, 0, ..., 0) and offset Σa_i².
hull::FaceCertificate minkowski_tight_vertex_certificate(int k, const comb::ProductShape& shape, const IndexSets& sets,
                                                         const comb::Label& label);

/// Builds the points and a validated certificate for every k-face, halving the spread on failure.
/// Throws ConstructionFailed after `retry_cap` halvings, naming the last failing face.
MinkowskiResult minkowski_tight(const MinkowskiSpec& spec);

} // namespace psn::cons
