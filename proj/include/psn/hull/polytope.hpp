#pragma once

#include "psn/comb/product.hpp"
#include "psn/exact/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace psn::hull {

using comb::Label;
using exact::Rational;
using exact::RatVector;

class DegenerateInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownLabel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite point set with one distinct label per point.
class LabeledVPolytope {
public:
    explicit LabeledVPolytope(std::size_t ambient_dim) : dim_(ambient_dim) {}

    void add(Label label, RatVector point);

    std::size_t ambient_dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const Label& label(std::size_t i) const { return labels_[i]; }
    const RatVector& point(std::size_t i) const { return points_[i]; }
    const std::vector<Label>& labels() const { return labels_; }
    const std::vector<RatVector>& points() const { return points_; }
    std::optional<std::size_t> index_of(const Label& label) const;
    /// Throws UnknownLabel.
    std::vector<std::size_t> indices_of(const std::vector<Label>& labels) const;

    bool operator==(const LabeledVPolytope& o) const { return dim_ == o.dim_ && labels_ == o.labels_ && points_ == o.points_; }

private:
    std::size_t dim_;
    std::vector<Label> labels_;
    std::vector<RatVector> points_;
    std::map<Label, std::size_t> index_;
};

/// ⟨normal, p⟩ = offset on the contact points, < offset on every other point.
struct FaceCertificate {
    RatVector normal;
    Rational offset;
    std::vector<std::size_t> contact; // sorted point indices
};

/// Re-checks equality on the contact set and strict inequality elsewhere.
bool validate_certificate(const LabeledVPolytope& p, const FaceCertificate& c);

/// Dimension of the affine hull; −1 for the empty set.
int affine_dimension(const std::vector<RatVector>& points);
int affine_dimension(const LabeledVPolytope& p, const std::vector<std::size_t>& subset);

/// Isomorphic copy in R^{dim aff P}, obtained by keeping a set of coordinates that is injective on the affine hull.
LabeledVPolytope restrict_to_affine_hull(const LabeledVPolytope& p);

/// Brute force over affinely independent d-subsets; one certificate per facet,
/// normal a primitive integer vector, sorted by contact set. Throws DegenerateInput unless full-dimensional.
std::vector<FaceCertificate> enumerate_facets(const LabeledVPolytope& p);

/// Supporting hyperplane with equality exactly on `contact`, or nullopt (NOT_A_FACE).
/// Contact equal to all points yields nullopt; empty contact throws std::invalid_argument.
std::optional<FaceCertificate> certify_face(const LabeledVPolytope& p, const std::vector<std::size_t>& contact);
std::optional<FaceCertificate> certify_face(const LabeledVPolytope& p, const std::vector<Label>& contact);

struct Face {
    std::vector<std::size_t> contact; // all points lying on the face
    int dim;
    bool operator==(const Face&) const = default;
};

/// All nonempty faces including P itself, as intersections of facet contact sets. Requires full dimension.
std::vector<Face> face_lattice(const LabeledVPolytope& p);

/// Projection-Lemma test: the last n−d coordinates of the outer normals of the facets containing the face positively span.
/// Throws std::invalid_argument when `contact` is not a face, or d is out of (0, n].
bool strictly_preserved(const LabeledVPolytope& p, const std::vector<std::size_t>& contact, std::size_t d);

/// Direct test of the definition for projection to the first d coordinates: the projected face is a face whose
/// preimage is exactly the face, and the projection is injective on its affine hull.
bool strictly_preserved_direct(const LabeledVPolytope& p, const std::vector<std::size_t>& contact, std::size_t d);

/// First d coordinates of every point.
LabeledVPolytope project(const LabeledVPolytope& p, std::size_t d);

} // namespace psn::hull
