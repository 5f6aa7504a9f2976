#pragma once

#include "psn/exact/matrix.hpp"
#include "psn/hull/polytope.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace psn::deformed {

using exact::Rational;
using exact::RatVector;

/// A vector configuration in R^codim, one vector per point of the primal configuration.
struct GaleConfig {
    std::size_t codim = 0;
    std::vector<RatVector> vectors;
    std::vector<std::string> names; // "e1", "g3", "g*", or the primal label
    // Primal data when the family comes from a cyclic polytope.
    int primal_dim = -1;
    std::vector<Rational> primal_params;
};

/// Rows of a basis of the kernel of V^T, where V has the given vectors as rows.
/// For the lifted rows (1, p) of a point set this is its Gale transform.
std::vector<RatVector> gale_dual(const std::vector<RatVector>& vectors);

/// Gale transform of the vertex set; throws hull::DegenerateInput unless the points affinely span.
GaleConfig gale_transform(const hull::LabeledVPolytope& points);

/// True iff the two configurations have the same number of vectors and the same column space,
/// i.e. agree up to an invertible linear change of coordinates.
bool linearly_equivalent(const std::vector<RatVector>& a, const std::vector<RatVector>& b);

class GaleFamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct GaleFamilyRequest {
    std::size_t codim = 0;        // n − d
    std::size_t extra = 0;        // number of vectors g_1, ..., g_extra
    bool star = false;            // append g_* with all entries negative
};

/// Gale transform of the cyclic polytope C_D(N), N = codim + extra + [star], D = N − codim − 1,
/// with parameters 1..N. The last codim vectors before g_* are sent to e_1, ..., e_codim.
/// With `star`, g_1, ..., g_extra are the initial block of vertices, which is a facet, so g_* < 0 entrywise.
/// The result lists g_1, ..., g_extra, then e_1, ..., e_codim, then g_*.
GaleConfig neighborly_gale_family(const GaleFamilyRequest& request);

/// Every subset of at least this many vectors of a neighborly family positively spans: N − ⌊D/2⌋.
std::size_t spanning_threshold(const GaleConfig& g);

/// D = N − codim − 1, the dimension of the primal polytope.
int primal_dimension(const GaleConfig& g);

} // namespace psn::deformed
