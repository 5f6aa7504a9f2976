#pragma once

#include "psn/comb/product.hpp"
#include "psn/deformed/gale.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace psn::deformed {

/// Simple polytope factor: dimension n, m facets, chromatic number χ of its polar graph
/// (facets adjacent iff they meet in a ridge). Rows of the facet matrix: top m − n rows, then the n basis rows.
struct SimpleFactor {
    int n = 0;
    int m = 0;
    std::optional<int> chi;
    std::optional<exact::RatMatrix> facets;  // m × n
    std::vector<int> coloring;               // proper coloring of the facets with χ colors, when known

    /// First row all −1, then the identity. χ = n+1, except χ = 1 for a segment.
    static SimpleFactor simplex(int n);
    /// Rows −e_1, ..., −e_s, then e_1, ..., e_s; χ = s.
    static SimpleFactor cube(int s);
    /// p-gon: χ = 2 for even p, 3 for odd p. No facet matrix.
    static SimpleFactor polygon(int p);
};

class MissingChromaticNumber : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class RowStatus { Good, Bad };

/// One row of the deformed matrix A~.
struct PlanRow {
    int factor;
    int row;              // row index inside A_factor
    RowStatus status;
    int vector = -1;      // index into the Gale family, −1 for bad rows
    std::string role;     // "g", "e", "g*", "gamma", "top", "basis"
};

/// Γ incidence block of factor `factor`, placed on the given global columns (diagonal columns of later factors).
struct GammaBlock {
    int factor;
    std::vector<int> columns;
};

enum class PlanKind { Basic, Colored, PpsnCase1, PpsnCase2, Scaled };

struct DeformedPlan {
    PlanKind kind = PlanKind::Basic;
    std::vector<SimpleFactor> factors;
    int d = 0;
    int t = 0;
    int m_bar = 0, n_bar = 0, chi_bar = 0;
    int n = 0, m = 0;
    int alpha = 0, beta = 0;
    int max_k = 0;
    bool star = false;
    std::vector<PlanRow> rows;               // every row of A~, block by block
    std::vector<GammaBlock> gamma_blocks;
    std::optional<GaleConfig> gale;          // concrete vectors, when the layout is supported
    std::string note;                        // reason when concrete vectors are unavailable

    int gamma(int k) const { return n - k - beta; }
    int bad_rows() const;
};

/// Floor division for possibly negative numerators.
int floor_div(int a, int b);

/// Largest t with Σ_{i<t} n_i ≤ d.
int split_index(const std::vector<SimpleFactor>& factors, int d);

/// Basic layout: distinct g's on the rows of the first t factors and on the sliced basis rows.
/// max_k = Σ(n_i − m_i) + ⌊(d − 1 + Σ_{i≤t}(m_i − n_i))/2⌋, and n when d = n.
DeformedPlan plan_basic(const std::vector<SimpleFactor>& factors, int d);

/// Colored layout: rows of one color class share a g.
/// max_k = Σ(n_i − m_i) + Σ_{i≤t}(m_i − χ_i) + ⌊(d − 1 + Σ_{i≤t}(χ_i − n_i))/2⌋. Throws MissingChromaticNumber.
DeformedPlan plan_colored(const std::vector<SimpleFactor>& factors, int d);

/// Δ = m_i − χ_i + ⌊(m̄ + d − n̄ − n_i − 1)/2⌋ − ⌊(m̄ + d − n̄ − 1)/2⌋ for a factor i ≥ t (0-based).
int scaling_delta(const DeformedPlan& plan, int i);

/// Layout of A~ for the row/column predicates: g-covered rows and Γ blocks.
struct BlockLayout {
    std::vector<SimpleFactor> factors;
    int d = 0;
    std::vector<std::vector<bool>> g_covered; // per factor, per row
    std::vector<GammaBlock> gamma_blocks;

    int column_start(int factor) const;
    int factor_of_column(int column) const;
    /// Row index inside A_i of the diagonal entry in global column c.
    int diagonal_row(int column) const;
};

/// A column is unnecessary iff its diagonal entry has a Γ block on the right and none above.
std::vector<bool> unnecessary_columns(const BlockLayout& layout);
/// A row is good iff it is covered by a g or a Γ block, or it is a basis row whose diagonal entry has no Γ above.
std::vector<std::vector<RowStatus>> row_statuses(const BlockLayout& layout);

class UnsupportedLayout : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Basic layout plus Γ_i for factor i ≥ t+1 (0-based), placed on the first χ_i diagonal columns of factor i+1.
/// Requires χ_i ≤ n_{i+1}; other placements throw UnsupportedLayout.
DeformedPlan plan_scaled(const std::vector<SimpleFactor>& factors, int d, int i);

enum class OrderStrategy { AsGiven, DecreasingFacets, Exhaustive };

/// Reorders the factors; Exhaustive maximizes plan_colored's max_k over all orders (r ≤ 6, else throws).
std::vector<SimpleFactor> order_factors(const std::vector<SimpleFactor>& factors, int d, OrderStrategy strategy);

/// PPSN plan for the shape sorted increasingly (segments first):
/// case (1) for d ≤ s − 1: k ≤ ⌊d/2⌋ − r + s − 1; case (2) for d ≥ s: k ≤ ⌊(d+t−s)/2⌋ − r + s.
/// The case (2) plan carries concrete Gale vectors; the case (1) plan only its counts.
struct PpsnPlanResult {
    bool feasible;
    DeformedPlan plan;
    comb::ProductShape sorted_shape;
};
PpsnPlanResult ppsn_plan(int k, const comb::ProductShape& shape, int d);

/// Largest k allowed by the PPSN plan at dimension d (may be negative).
int ppsn_max_k(const comb::ProductShape& shape, int d);

/// Smallest PPSN dimension from deformed products: 2(k+r)−s−t, 2(k+r−s)+1 or 2(k+r−s+1) according to 3s versus 2k+2r.
int upper_bound_defp(int k, const comb::ProductShape& shape);

struct PlanFaceFailure {
    comb::ProductFace face;
    std::vector<RatVector> vectors;
};

struct PlanCertificate {
    bool pass = false;
    int k = 0;
    std::size_t faces_checked = 0;
    int min_good = 0;            // smallest number of good facets over the k-faces
    bool accounting_ok = false;  // bad rows = β and every face has ≥ γ(k) good facets
    std::vector<PlanFaceFailure> failures;
};

class PlanWithoutVectors : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Row of A_i carrying the facet opposite vertex j of Δ_{n_i}.
inline int facet_row(int vertex) { return vertex; }

/// Projection-Lemma certificate: for every k-face of the product of simplices, the Gale vectors of its good facets
/// positively span R^{n−d}. Throws PlanWithoutVectors when the plan has no concrete family.
PlanCertificate certify_plan(const DeformedPlan& plan, const comb::ProductShape& shape, int k);

/// Copy of the plan with the Gale vector of the given row set to zero.
DeformedPlan sabotage(const DeformedPlan& plan, int factor, int row);

std::string to_string(PlanKind kind);
std::string to_string(RowStatus s);

} // namespace psn::deformed
