#pragma once

#include "psn/exact/rational.hpp"

#include <optional>
#include <vector>

namespace psn::exact {

enum class Relation { LessEqual, Equal, GreaterEqual };

/// One row a·x (rel) b of a feasibility problem over free variables x.
struct LinearConstraint {
    RatVector a;
    Relation rel;
    Rational b;
};

enum class LpVerdict { Feasible, Infeasible };

struct LpResult {
    LpVerdict verdict;
    RatVector witness; // filled when feasible
    bool feasible() const { return verdict == LpVerdict::Feasible; }
};

/// Exact phase-one simplex with Bland's rule. `dim` is required when the list is empty.
/// Every feasible witness is re-substituted into all constraints before returning.
LpResult lp_feasible(const std::vector<LinearConstraint>& constraints, std::optional<std::size_t> dim = std::nullopt);

bool satisfies(const LinearConstraint& c, const RatVector& x);

/// True iff the vectors linearly span R^D and admit λ_i ≥ 1 with Σλ_i v_i = 0.
/// For D = 0 the answer is true; for an empty list with D > 0 it is false.
bool positively_spanning(const std::vector<RatVector>& vectors, std::size_t dim);

} // namespace psn::exact
