#pragma once

#include "psn/exact/rational.hpp"
#include "psn/obstructions/kneser.hpp"

#include <string>
#include <vector>

namespace psn::obstr {

using comb::ProductShape;

/// Minimal non-faces of the simplicial complex on vertices 0..vertices−1 generated by `facets` (single block each).
/// Exhaustive over all subsets; vertices ≤ 20.
std::vector<BlockSet> complex_minimal_nonfaces(int vertices, const std::vector<BlockSet>& facets);

/// Sarkaria: a complex on `vertex_count` vertices with minimal non-faces Z embeds in R^d only if d ≥ |V| − t − 1,
/// where t is the palette of a proper coloring of KG(Z). Throws ImproperColoring if the coloring is not on Z.
int sarkaria_bound(int vertex_count, const std::vector<BlockSet>& nonfaces, const Coloring& coloring);

/// Sanyal: n − t + 1, or n − t when K is the entire boundary complex of the projection polytope.
/// The coloring must be on the minimal non-faces of the complex K of (shape, k).
int sanyal_bound(const ProductShape& shape, int k, const Coloring& coloring, bool entire_boundary = false);

/// Necessary condition for K to be the entire boundary of the projection polytope when the full k-skeleton is kept:
/// dim K = r + k − 1 must equal dim Q − 1 = r + d − 2, and every (k−1)-face must lie in exactly two k-faces.
/// The second part forces k = n − 1, so the answer is d = k + 1 = n.
bool entire_boundary_possible(const ProductShape& shape, int k, int d);

class InvalidPartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Σ_{i∈R} ⌊(n_i−2)/2⌋, the range of the small-k theorem.
int small_k_range(const ProductShape& shape);

/// A tuple with Σ k_i = k, k_i = 0 on segments and 2k_i ≤ n_i − 2 elsewhere (filled left to right).
/// Throws InvalidPartition when k exceeds small_k_range.
std::vector<int> small_k_tuple(const ProductShape& shape, int k);

/// Block-wise coloring of KG(Z) with palette Σχ_i, χ_i = 1 on segments and n_i − 2k_i − 1 otherwise.
Coloring coloring_small_k(const ProductShape& shape, int k, const std::vector<int>& ks);

/// One-color coloring of KG(Z) for k ≥ ⌊Σn_i/2⌋; properness is checked against every pair of members.
/// Throws SizeCapExceeded when |Z| > member_cap.
Coloring coloring_large_k(const ProductShape& shape, int k, std::size_t member_cap = 5000);

/// True iff k = Σn_i/2 − 1 and k + 1 is not a sum of a subset of the n_i.
bool better_coloring_check(const ProductShape& shape, int k);

/// [r] = A ⊎ B with B ⊇ S, budgets k_i (i ∈ A, in the order of A) and k_B.
struct PartitionChoice {
    std::vector<int> A;
    std::vector<int> B;
    std::vector<int> k_A;
    int k_B = 0;

    int n_B(const ProductShape& shape) const;
    int total_budget() const;
};

/// n_i − 2k_i − 1 if 2k_i ≤ n_i − 2, else 1.
int chi_factor(int n_i, int k_i);
/// 0 if n_B = 0; n_B − 2k_B if 2k_B ≤ n_B − 1; else 1.
int chi_block(int n_B, int k_B);

/// Throws InvalidPartition unless A, B cover [r] disjointly, B ⊇ S, Σk_i + k_B ≤ k, 2k_i ≤ n_i − 1, 2k_B ≤ n_B.
void validate_partition(const ProductShape& shape, int k, const PartitionChoice& p);

/// χ = Σχ_i + χ_B.
int partition_chi(const ProductShape& shape, const PartitionChoice& p);
/// d_k = Σn_i + 1 − χ.
int partition_d_k(const ProductShape& shape, const PartitionChoice& p);

/// Merged coloring of KG(Z) with palette partition_chi. A member takes the first i ∈ A with |G_i| ≥ k_i + 2,
/// otherwise the B-part. Validates the partition.
Coloring coloring_partition(const ProductShape& shape, int k, const PartitionChoice& p);

struct KValues {
    int K1 = 0;
    int K2 = 0;
};
/// K_1 = Σ_{i∈A}⌊(n_i−2)/2⌋ + max{0, ⌊(n_B−1)/2⌋}, K_2 = #{i ∈ A : n_i odd} + [n_B even and non-zero].
KValues k_values(const ProductShape& shape, const std::vector<int>& B);

/// The three-case bound of the all-k theorem for the partition (A, B); the budgets of p are ignored.
int bound_all_k(const ProductShape& shape, int k, const PartitionChoice& p);
int bound_all_k(const ProductShape& shape, int k, const std::vector<int>& B);

/// Budgets by repeated increments: gain-2 steps first (A in order, then B), then gain-1 steps.
PartitionChoice allocate_greedy(const ProductShape& shape, int k, const std::vector<int>& B);
/// Budgets maximizing d_k over every admissible allocation; first maximum in lexicographic order.
PartitionChoice allocate_exhaustive(const ProductShape& shape, int k, const std::vector<int>& B);

/// Complement of B in [r], increasing.
std::vector<int> complement(const ProductShape& shape, const std::vector<int>& B);

enum class CurveCase { A, B, C, D };
/// A: |S| even and non-zero; B: |S| odd; C: |S| = 0 with an odd n_i; D: all n_i even.
CurveCase curve_case(const ProductShape& shape);
char to_char(CurveCase c);

struct LowerBound {
    int value = 0;            // final bound, clamped to Σn_i
    int theorem_value = 0;    // best all-k bound, clamped to Σn_i
    PartitionChoice witness;  // maximizing partition with its greedy allocation
    bool better_coloring = false;
    CurveCase curve = CurveCase::D;
    std::string tag;          // "all-k" or "better-coloring"
};

/// Maximum of bound_all_k over every B ⊇ S, raised to Σn_i when better_coloring_check fires. Throws for r > 20.
LowerBound best_lower_bound(const ProductShape& shape, int k);

/// d_0, d_1, ..., d_{k_max} as predicted by the A–D case description: steps of two up to K_1(R, S),
/// then the odd-factor blocks of the case, then steps of one, clamped to Σn_i.
std::vector<int> predicted_curve(const ProductShape& shape, int k_max);

struct CurveCheck {
    bool pass = false;
    int first_mismatch = -1;
    std::vector<int> actual;
    std::vector<int> predicted;
};
/// Compares theorem_value for k = 0..Σn_i + 2 with predicted_curve.
CurveCheck check_curve_shape(const ProductShape& shape);

/// Case (1, 2 or 3) of the Rörig–Sanyal bound for equal parts n, r factors, at k.
int rs_case(int n, int r, int k);
/// The Rörig–Sanyal bound; may be a half-integer in its second case. Requires n, r ≥ 1 and k ≥ 0.
exact::Rational rs_bound(int n, int r, int k);
/// Second-case expression k + r(n−1)/2 + 1, evaluated at any k.
exact::Rational rs_second_case(int n, int r, int k);

} // namespace psn::obstr
