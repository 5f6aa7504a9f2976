#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace psn::comb {

/// Product-vertex label (a_1, ..., a_r), each a_i in [0, n_i]. Opaque labels reuse the same type.
using Label = std::vector<int>;

class InvalidShape : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The tuple (n_1, ..., n_r) of simplex dimensions. Blocks and vertices are 0-based.
class ProductShape {
public:
    explicit ProductShape(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int r() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
    int n() const;
    int m() const;
    /// Blocks with n_i = 1.
    std::vector<int> segments() const;
    /// Blocks with n_i >= 2.
    std::vector<int> non_segments() const;
    /// All product vertices in lexicographic order.
    std::vector<Label> vertices() const;
    bool is_vertex_label(const Label& a) const;
    std::string to_string() const;

    bool operator==(const ProductShape&) const = default;

private:
    std::vector<int> parts_;
};

/// Element (i, j) of the disjoint union [n_1+1] ⊎ ... ⊎ [n_r+1]; identified with the facet ψ_{i,j}.
struct FacetLabel {
    int block;
    int vertex;
    auto operator<=>(const FacetLabel&) const = default;
};

/// Subset of the disjoint union, stored as one bitmask per block.
class BlockSet {
public:
    BlockSet() = default;
    explicit BlockSet(std::size_t blocks) : masks_(blocks, 0) {}
    explicit BlockSet(std::vector<std::uint64_t> masks) : masks_(std::move(masks)) {}

    std::size_t blocks() const { return masks_.size(); }
    std::uint64_t mask(std::size_t i) const { return masks_[i]; }
    const std::vector<std::uint64_t>& masks() const { return masks_; }
    int block_size(std::size_t i) const;
    int size() const;
    bool empty() const;
    bool contains(int block, int vertex) const;
    void insert(int block, int vertex);
    void erase(int block, int vertex);
    bool intersects(const BlockSet& o) const;
    bool is_subset_of(const BlockSet& o) const;
    std::vector<FacetLabel> elements() const;
    std::vector<int> block_elements(std::size_t i) const;
    std::string to_string() const;

    bool operator==(const BlockSet& o) const { return masks_ == o.masks_; }
    /// Lexicographic on the sorted element lists.
    std::strong_ordering operator<=>(const BlockSet& o) const;

private:
    std::vector<std::uint64_t> masks_;
};

/// Face F_1 × ... × F_r of Δ_{n_1} × ... × Δ_{n_r}; every F_i nonempty.
class ProductFace {
public:
    ProductFace(const ProductShape& shape, BlockSet parts);
    static ProductFace full(const ProductShape& shape);
    static ProductFace vertex(const ProductShape& shape, const Label& a);

    const BlockSet& parts() const { return parts_; }
    int dim() const;
    std::vector<Label> vertices() const;
    bool contains(const Label& a) const;
    std::string to_string() const;

    bool operator==(const ProductFace& o) const { return parts_ == o.parts_; }
    auto operator<=>(const ProductFace& o) const { return parts_ <=> o.parts_; }

private:
    BlockSet parts_;
};

/// Members sorted lexicographically.
struct SetSystem {
    ProductShape shape;
    std::vector<BlockSet> members;
};

/// Faces of dimension exactly k, sorted. Throws std::out_of_range unless 0 <= k <= n.
std::vector<ProductFace> enumerate_k_faces(const ProductShape& shape, int k);

/// Facets not containing F, i.e. F_1 ⊎ ... ⊎ F_r.
BlockSet nonincident_facets(const ProductFace& f);
/// φ(F): the facets containing F.
BlockSet containing_facets(const ProductShape& shape, const ProductFace& f);

SetSystem complex_K(const ProductShape& shape, int k);
SetSystem minimal_nonfaces(const ProductShape& shape, int k);
bool is_face_of_K(const ProductShape& shape, int k, const BlockSet& candidate);

/// Σ_{G_i ≠ ∅} (|G_i| − 1).
int excess(const BlockSet& g);

long long binomial(int n, int k);

} // namespace psn::comb
