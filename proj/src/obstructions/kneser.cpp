#include "psn/obstructions/kneser.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace psn::obstr {

std::size_t Graph::edge_count() const {
    std::size_t e = 0;
    for (const auto& a : adj) e += a.size();
    return e / 2;
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj.at(static_cast<std::size_t>(u));
    return std::binary_search(a.begin(), a.end(), v);
}

Graph Graph::complete(std::size_t n) {
    Graph g;
    g.adj.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) g.adj[i].push_back(static_cast<int>(j));
    return g;
}

Graph Graph::edgeless(std::size_t n) {
    Graph g;
    g.adj.resize(n);
    return g;
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.adj.resize(n);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        g.adj.at(static_cast<std::size_t>(u)).push_back(v);
        g.adj.at(static_cast<std::size_t>(v)).push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

KneserGraph kneser_graph(std::vector<BlockSet> members) {
    KneserGraph kg;
    kg.graph.adj.resize(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!members[i].intersects(members[j])) {
                kg.graph.adj[i].push_back(static_cast<int>(j));
                kg.graph.adj[j].push_back(static_cast<int>(i));
            }
    for (auto& a : kg.graph.adj) std::sort(a.begin(), a.end());
    kg.members = std::move(members);
    return kg;
}

KneserGraph kneser_subsets(int n, int k) {
    if (k < 0 || n < 0 || n > 63) throw std::invalid_argument("kneser_subsets: need 0 ≤ k and 0 ≤ n ≤ 63");
    std::vector<BlockSet> members;
    if (k <= n) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            BlockSet s(1);
            for (int x : idx) s.insert(0, x);
            members.push_back(s);
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return kneser_graph(std::move(members));
}

std::vector<int> as_indices(const BlockSet& s) {
    std::vector<int> out;
    for (const auto& e : s.elements()) out.push_back(e.vertex);
    return out;
}

Coloring::Coloring(const KneserGraph& graph, std::vector<int> colors, int palette)
    : members_(graph.members), colors_(std::move(colors)), palette_(palette) {
    if (colors_.size() != members_.size()) throw ImproperColoring("coloring: one color per member required");
    for (int c : colors_)
        if (c < 0 || c >= palette_) throw ImproperColoring("coloring: color " + std::to_string(c) + " outside the palette");
    for (std::size_t u = 0; u < graph.graph.size(); ++u)
        for (int v : graph.graph.adj[u])
            if (colors_[u] == colors_[static_cast<std::size_t>(v)])
                throw ImproperColoring("coloring: disjoint members " + members_[u].to_string() + " and " +
                                       members_[static_cast<std::size_t>(v)].to_string() + " share color " + std::to_string(colors_[u]));
}

int Coloring::used() const { return static_cast<int>(std::set<int>(colors_.begin(), colors_.end()).size()); }

int upper_palette(int n, int k) { return std::max(1, n - 2 * k + 2); }

int upper_color(const std::vector<int>& subset, int n, int k) {
    if (n - 2 * k + 2 <= 1) return 0;
    int c = n - 2 * k + 1;
    for (int x : subset) c = std::min(c, x);
    return c;
}

Coloring kneser_upper_coloring(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("kneser_upper_coloring: need 0 ≤ k ≤ n");
    auto kg = kneser_subsets(n, k);
    std::vector<int> colors;
    for (const auto& m : kg.members) colors.push_back(upper_color(as_indices(m), n, k));
    return Coloring(kg, std::move(colors), upper_palette(n, k));
}

namespace {

// Backtracking search for a t-coloring: DSATUR vertex choice, colors limited to used+1 (symmetry breaking).
class Dsatur {
public:
    Dsatur(const Graph& g, int t)
        : g_(g), t_(t), color_(g.size(), -1), count_(g.size(), std::vector<int>(static_cast<std::size_t>(t), 0)), satur_(g.size(), 0) {}

    bool run() { return step(0, 0); }
    const std::vector<int>& colors() const { return color_; }

private:
    bool step(std::size_t colored, int used) {
        if (colored == g_.size()) return true;
        int best = -1, best_sat = -1;
        std::size_t best_deg = 0;
        for (std::size_t v = 0; v < g_.size(); ++v) {
            if (color_[v] >= 0) continue;
            if (satur_[v] > best_sat || (satur_[v] == best_sat && g_.adj[v].size() > best_deg)) {
                best = static_cast<int>(v);
                best_sat = satur_[v];
                best_deg = g_.adj[v].size();
            }
        }
        if (best_sat >= t_) return false;
        const auto v = static_cast<std::size_t>(best);
        const int limit = std::min(t_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (count_[v][static_cast<std::size_t>(c)] != 0) continue;
            color_[v] = c;
            bool ok = true;
            for (int u : g_.adj[v]) {
                auto& cnt = count_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)];
                if (cnt++ == 0) {
                    ++satur_[static_cast<std::size_t>(u)];
                    if (color_[static_cast<std::size_t>(u)] < 0 && satur_[static_cast<std::size_t>(u)] >= t_) ok = false;
                }
            }
            if (ok && step(colored + 1, std::max(used, c + 1))) return true;
            for (int u : g_.adj[v])
                if (--count_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 0) --satur_[static_cast<std::size_t>(u)];
            color_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int t_;
    std::vector<int> color_;
    std::vector<std::vector<int>> count_;
    std::vector<int> satur_;
};

} // namespace

std::vector<int> optimal_coloring(const Graph& g, std::size_t vertex_cap) {
    if (g.size() > vertex_cap)
        throw SizeCapExceeded("brute_chromatic: " + std::to_string(g.size()) + " vertices exceed the cap " + std::to_string(vertex_cap));
    if (g.size() == 0) return {};
    for (int t = 1;; ++t) {
        Dsatur s(g, t);
        if (s.run()) return s.colors();
    }
}

int brute_chromatic(const Graph& g, std::size_t vertex_cap) {
    auto c = optimal_coloring(g, vertex_cap);
    int t = 0;
    for (int x : c) t = std::max(t, x + 1);
    return t;
}

} // namespace psn::obstr
