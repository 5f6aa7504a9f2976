#pragma once

#include "psn/comb/product.hpp"
#include "psn/hull/polytope.hpp"
#include "psn/hull/verify.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace psn::cons {

using exact::Rational;
using exact::RatVector;

class ConstructionFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// (t, t², ..., t^d).
RatVector moment_curve(const Rational& t, int d);

struct CyclicSpec {
    int dim;
    std::vector<Rational> params; // strictly increasing, at least dim+1 entries
};

/// Points μ_d(t_i) labeled (i), i = 0..n−1.
hull::LabeledVPolytope cyclic_polytope(const CyclicSpec& spec);
/// Parameters 0, 1, ..., n−1.
CyclicSpec default_cyclic(int dim, int n);

enum class FacetSide { Upper, Lower };

struct GaleFacet {
    std::vector<int> indices; // 0-based, increasing
    FacetSide side;
    bool operator==(const GaleFacet&) const = default;
};

/// Facets of C_d(n) by the evenness criterion; Upper iff the block ending at the last index has odd size.
std::vector<GaleFacet> gale_evenness_facets(int d, int n);

/// For d = 2k+2: every (k+1)-subset of [n] that is not a face of C_{2k+1}(n) lies only in lower facets of C_{2k+2}(n).
/// Returns the offending subsets (empty when the statement holds).
std::vector<std::vector<int>> lower_facet_lemma_violations(int k, int n);

struct ProductOfCyclics {
    hull::LabeledVPolytope polytope;
    int dim;
    std::vector<int> cyclic_blocks; // blocks with n_i ≥ 2k+3
};

/// Π_{n_i ≥ 2k+3} C_{2k+2}(n_i+1) × Π_{other} Δ_{n_i}, parameters 0..n_i.
ProductOfCyclics product_of_cyclics(int k, const comb::ProductShape& shape);
int product_of_cyclics_dim(int k, const comb::ProductShape& shape);

struct ReflectSpec {
    int k;
    int n;
    std::vector<Rational> params;  // n+1 increasing values; empty = 0..n
    std::optional<Rational> lambda; // unset = automatic search
};

struct ReflectResult {
    hull::LabeledVPolytope polytope;
    Rational lambda;
    int attempts;
    hull::SkeletonReport report;
};

/// Points (t_i, ..., t_i^{2k+2}) labeled (0,i) and (t_i, ..., t_i^{2k+1}, λ − t_i^{2k+2}) labeled (1,i),
/// verified by full face-lattice comparison with Δ_1 × Δ_n. With an explicit λ the report is returned as is;
/// the automatic search throws ConstructionFailed after its cap.
ReflectResult reflect_construct(const ReflectSpec& spec);
hull::LabeledVPolytope reflect_points(int k, const std::vector<Rational>& params, const Rational& lambda);

} // namespace psn::cons
