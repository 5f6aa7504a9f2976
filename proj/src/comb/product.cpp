#include "psn/comb/product.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace psn::comb {

ProductShape::ProductShape(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidShape("shape must have at least one factor");
    for (int p : parts_)
        if (p < 1 || p > 62) throw InvalidShape("each n_i must lie in [1, 62]");
}

int ProductShape::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int ProductShape::m() const { return n() + r(); }

std::vector<int> ProductShape::segments() const {
    std::vector<int> s;
    for (int i = 0; i < r(); ++i)
        if (part(i) == 1) s.push_back(i);
    return s;
}

std::vector<int> ProductShape::non_segments() const {
    std::vector<int> s;
    for (int i = 0; i < r(); ++i)
        if (part(i) >= 2) s.push_back(i);
    return s;
}

std::vector<Label> ProductShape::vertices() const {
    std::vector<Label> out;
    Label a(parts_.size(), 0);
    while (true) {
        out.push_back(a);
        int i = r() - 1;
        while (i >= 0 && a[static_cast<std::size_t>(i)] == part(i)) a[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++a[static_cast<std::size_t>(i)];
    }
    return out;
}

bool ProductShape::is_vertex_label(const Label& a) const {
    if (a.size() != parts_.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] > parts_[i]) return false;
    return true;
}

std::string ProductShape::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
}

int BlockSet::block_size(std::size_t i) const { return std::popcount(masks_[i]); }

int BlockSet::size() const {
    int s = 0;
    for (auto m : masks_) s += std::popcount(m);
    return s;
}

bool BlockSet::empty() const {
    return std::all_of(masks_.begin(), masks_.end(), [](std::uint64_t m) { return m == 0; });
}

bool BlockSet::contains(int block, int vertex) const {
    return (masks_.at(static_cast<std::size_t>(block)) >> vertex) & 1u;
}

void BlockSet::insert(int block, int vertex) { masks_.at(static_cast<std::size_t>(block)) |= (std::uint64_t{1} << vertex); }

void BlockSet::erase(int block, int vertex) { masks_.at(static_cast<std::size_t>(block)) &= ~(std::uint64_t{1} << vertex); }

bool BlockSet::intersects(const BlockSet& o) const {
    for (std::size_t i = 0; i < masks_.size() && i < o.masks_.size(); ++i)
        if (masks_[i] & o.masks_[i]) return true;
    return false;
}

bool BlockSet::is_subset_of(const BlockSet& o) const {
    for (std::size_t i = 0; i < masks_.size(); ++i)
        if (masks_[i] & ~(i < o.masks_.size() ? o.masks_[i] : 0)) return false;
    return true;
}

std::vector<FacetLabel> BlockSet::elements() const {
    std::vector<FacetLabel> out;
    for (std::size_t i = 0; i < masks_.size(); ++i)
        for (int j : block_elements(i)) out.push_back({static_cast<int>(i), j});
    return out;
}

std::vector<int> BlockSet::block_elements(std::size_t i) const {
    std::vector<int> out;
    for (std::uint64_t m = masks_[i]; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::string BlockSet::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < masks_.size(); ++i) {
        if (i) s += "⊎";
        s += "{";
        auto e = block_elements(i);
        for (std::size_t j = 0; j < e.size(); ++j) s += (j ? "," : "") + std::to_string(e[j]);
        s += "}";
    }
    return s;
}

std::strong_ordering BlockSet::operator<=>(const BlockSet& o) const {
    auto a = elements(), b = o.elements();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

ProductFace::ProductFace(const ProductShape& shape, BlockSet parts) : parts_(std::move(parts)) {
    if (parts_.blocks() != static_cast<std::size_t>(shape.r())) throw InvalidShape("face has wrong number of blocks");
    for (int i = 0; i < shape.r(); ++i) {
        std::uint64_t allowed = (std::uint64_t{1} << (shape.part(i) + 1)) - 1;
        auto m = parts_.mask(static_cast<std::size_t>(i));
        if (m == 0) throw InvalidShape("face block must be nonempty");
        if (m & ~allowed) throw InvalidShape("face block index out of range");
    }
}

ProductFace ProductFace::full(const ProductShape& shape) {
    BlockSet b(static_cast<std::size_t>(shape.r()));
    for (int i = 0; i < shape.r(); ++i)
        for (int j = 0; j <= shape.part(i); ++j) b.insert(i, j);
    return ProductFace(shape, std::move(b));
}

ProductFace ProductFace::vertex(const ProductShape& shape, const Label& a) {
    if (!shape.is_vertex_label(a)) throw InvalidShape("label does not match shape");
    BlockSet b(static_cast<std::size_t>(shape.r()));
    for (int i = 0; i < shape.r(); ++i) b.insert(i, a[static_cast<std::size_t>(i)]);
    return ProductFace(shape, std::move(b));
}

int ProductFace::dim() const { return excess(parts_); }

std::vector<Label> ProductFace::vertices() const {
    std::vector<std::vector<int>> choices;
    for (std::size_t i = 0; i < parts_.blocks(); ++i) choices.push_back(parts_.block_elements(i));
    std::vector<Label> out;
    Label a(choices.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == choices.size()) {
            out.push_back(a);
            return;
        }
        for (int j : choices[i]) {
            a[i] = j;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

bool ProductFace::contains(const Label& a) const {
    if (a.size() != parts_.blocks()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] > 63 || !parts_.contains(static_cast<int>(i), a[i])) return false;
    return true;
}

std::string ProductFace::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.blocks(); ++i) {
        if (i) s += "x";
        s += "{";
        auto e = parts_.block_elements(i);
        for (std::size_t j = 0; j < e.size(); ++j) s += (j ? "," : "") + std::to_string(e[j]);
        s += "}";
    }
    return s;
}

int excess(const BlockSet& g) {
    int s = 0;
    for (std::size_t i = 0; i < g.blocks(); ++i)
        if (g.mask(i)) s += g.block_size(i) - 1;
    return s;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

// All size-s subsets of [0, n) as bitmasks, in increasing numeric order.
std::vector<std::uint64_t> subsets_of_size(int n, int s) {
    std::vector<std::uint64_t> out;
    if (s < 0 || s > n) return out;
    if (s == 0) return {0};
    std::uint64_t x = (std::uint64_t{1} << s) - 1, limit = std::uint64_t{1} << n;
    while (x < limit) {
        out.push_back(x);
        std::uint64_t c = x & -x, rr = x + c;
        x = (((rr ^ x) >> 2) / c) | rr;
    }
    return out;
}

// Per-block choices of sizes from `sizes(i)` such that the summed weights hit `target`.
void enumerate_blocks(const ProductShape& shape, int target, const std::function<std::vector<int>(int)>& sizes,
                      const std::function<int(int)>& weight, std::vector<BlockSet>& out) {
    const int r = shape.r();
    std::vector<std::uint64_t> cur(static_cast<std::size_t>(r));
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == r) {
            if (left == 0) out.emplace_back(cur);
            return;
        }
        for (int s : sizes(i)) {
            int w = weight(s);
            if (w > left) continue;
            for (auto mask : subsets_of_size(shape.part(i) + 1, s)) {
                cur[static_cast<std::size_t>(i)] = mask;
                rec(i + 1, left - w);
            }
        }
        cur[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, target);
    std::sort(out.begin(), out.end());
}

} // namespace

std::vector<ProductFace> enumerate_k_faces(const ProductShape& shape, int k) {
    if (k < 0 || k > shape.n()) throw std::out_of_range("enumerate_k_faces: k out of range");
    std::vector<BlockSet> sets;
    enumerate_blocks(
        shape, k,
        [&](int i) {
            std::vector<int> s;
            for (int c = 1; c <= shape.part(i) + 1; ++c) s.push_back(c);
            return s;
        },
        [](int s) { return s - 1; }, sets);
    std::vector<ProductFace> faces;
    faces.reserve(sets.size());
    for (auto& b : sets) faces.emplace_back(shape, std::move(b));
    return faces;
}

BlockSet nonincident_facets(const ProductFace& f) { return f.parts(); }

BlockSet containing_facets(const ProductShape& shape, const ProductFace& f) {
    BlockSet b(static_cast<std::size_t>(shape.r()));
    for (int i = 0; i < shape.r(); ++i)
        for (int j = 0; j <= shape.part(i); ++j)
            if (!f.parts().contains(i, j)) b.insert(i, j);
    return b;
}

SetSystem complex_K(const ProductShape& shape, int k) {
    SetSystem sys{shape, {}};
    for (auto& f : enumerate_k_faces(shape, k)) sys.members.push_back(f.parts());
    return sys;
}

SetSystem minimal_nonfaces(const ProductShape& shape, int k) {
    SetSystem sys{shape, {}};
    if (k < 0) throw std::out_of_range("minimal_nonfaces: negative k");
    enumerate_blocks(
        shape, k + 1,
        [&](int i) {
            std::vector<int> s{0};
            for (int c = 2; c <= shape.part(i) + 1; ++c) s.push_back(c);
            return s;
        },
        [](int s) { return s == 0 ? 0 : s - 1; }, sys.members);
    return sys;
}

bool is_face_of_K(const ProductShape& shape, int k, const BlockSet& candidate) {
    if (candidate.blocks() != static_cast<std::size_t>(shape.r())) throw InvalidShape("candidate has wrong number of blocks");
    return excess(candidate) <= k;
}

} // namespace psn::comb
