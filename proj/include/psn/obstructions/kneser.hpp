#pragma once

#include "psn/comb/product.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace psn::obstr {

using comb::BlockSet;

/// Simple undirected graph on 0..size−1 with sorted adjacency lists.
struct Graph {
    std::vector<std::vector<int>> adj;

    std::size_t size() const { return adj.size(); }
    std::size_t edge_count() const;
    bool adjacent(int u, int v) const;
    static Graph complete(std::size_t n);
    static Graph edgeless(std::size_t n);
    static Graph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges);
};

/// Kneser graph of a set system: members adjacent iff disjoint.
struct KneserGraph {
    std::vector<BlockSet> members;
    Graph graph;
};

KneserGraph kneser_graph(std::vector<BlockSet> members);

/// KG_n^k: all k-subsets of [n] (a single block), lexicographic order.
KneserGraph kneser_subsets(int n, int k);

/// Members of the system, as sorted element lists within one block.
std::vector<int> as_indices(const BlockSet& s);

class ImproperColoring : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Proper coloring of a Kneser graph with colors in [0, palette). Validated on construction.
class Coloring {
public:
    Coloring(const KneserGraph& graph, std::vector<int> colors, int palette);

    const std::vector<BlockSet>& members() const { return members_; }
    const std::vector<int>& colors() const { return colors_; }
    int palette() const { return palette_; }
    int color_of(std::size_t member) const { return colors_.at(member); }
    /// Number of distinct colors actually used.
    int used() const;

private:
    std::vector<BlockSet> members_;
    std::vector<int> colors_;
    int palette_;
};

/// Color of a k-subset F of [n] (0-based, sorted) under c(F) = min(F ∪ {n−2k+1}); 0 when n − 2k + 2 ≤ 1.
int upper_color(const std::vector<int>& subset, int n, int k);
/// max{1, n − 2k + 2}.
int upper_palette(int n, int k);

/// The coloring c(F) = min(F ∪ {n−2k+2}) (1-based) of KG_n^k. For n ≤ 2k − 1 the graph is edgeless
/// and one color is used. Throws std::invalid_argument for k < 0 or k > n.
Coloring kneser_upper_coloring(int n, int k);

class SizeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact chromatic number by DSATUR branch and bound. The empty graph has χ = 0.
/// Throws SizeCapExceeded above `vertex_cap` vertices.
int brute_chromatic(const Graph& g, std::size_t vertex_cap = 200);

/// A proper coloring with brute_chromatic(g) colors.
std::vector<int> optimal_coloring(const Graph& g, std::size_t vertex_cap = 200);

} // namespace psn::obstr
