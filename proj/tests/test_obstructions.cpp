#include "doctest.h"

#include "psn/obstructions/bounds.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace psn;
using namespace psn::obstr;
using comb::ProductShape;

namespace {

std::vector<std::vector<int>> partitions_up_to(int max_sum) {
    std::vector<std::vector<int>> out;
    std::function<void(int, int, std::vector<int>&)> rec = [&](int left, int largest, std::vector<int>& cur) {
        if (!cur.empty()) out.push_back(cur);
        for (int x = std::min(left, largest); x >= 1; --x) {
            cur.push_back(x);
            rec(left - x, x, cur);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    rec(max_sum, max_sum, cur);
    return out;
}

// Flattens a product set system to one block, block i occupying [offset_i, offset_i + n_i + 1).
BlockSet flatten(const ProductShape& shape, const BlockSet& s) {
    BlockSet out(1);
    int offset = 0;
    for (int i = 0; i < shape.r(); ++i) {
        for (int v : s.block_elements(static_cast<std::size_t>(i))) out.insert(0, offset + v);
        offset += shape.part(i) + 1;
    }
    return out;
}

Coloring optimal(const KneserGraph& kg) {
    auto c = optimal_coloring(kg.graph);
    int t = 0;
    for (int x : c) t = std::max(t, x + 1);
    return Coloring(kg, c, std::max(t, 1));
}

std::vector<std::vector<int>> all_B(const ProductShape& shape) {
    std::vector<std::vector<int>> out;
    auto S = shape.segments();
    auto R = shape.non_segments();
    for (unsigned mask = 0; mask < (1u << R.size()); ++mask) {
        auto B = S;
        for (std::size_t j = 0; j < R.size(); ++j)
            if (mask >> j & 1) B.push_back(R[j]);
        std::sort(B.begin(), B.end());
        out.push_back(B);
    }
    return out;
}

} // namespace

TEST_CASE("Kneser graph examples") {
    auto k1 = kneser_subsets(6, 1);
    CHECK(k1.graph.size() == 6);
    CHECK(k1.graph.edge_count() == 15);
    auto petersen = kneser_subsets(5, 2);
    CHECK(petersen.graph.size() == 10);
    CHECK(petersen.graph.edge_count() == 15);
    for (const auto& a : petersen.graph.adj) CHECK(a.size() == 3);
    for (int k = 2; k <= 4; ++k) CHECK(kneser_subsets(2 * k - 1, k).graph.edge_count() == 0);
    CHECK(kneser_subsets(4, 5).graph.size() == 0);
}

TEST_CASE("brute-force chromatic number") {
    CHECK(brute_chromatic(Graph::complete(4)) == 4);
    CHECK(brute_chromatic(kneser_subsets(5, 2).graph) == 3);
    CHECK(brute_chromatic(Graph::edgeless(7)) == 1);
    CHECK(brute_chromatic(Graph::edgeless(0)) == 0);
    auto c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(brute_chromatic(c5) == 3);
    auto c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    CHECK(brute_chromatic(c6) == 2);
    CHECK_THROWS_AS(brute_chromatic(Graph::edgeless(10), 5), SizeCapExceeded);
    auto col = optimal_coloring(kneser_subsets(6, 2).graph);
    CHECK_NOTHROW(Coloring(kneser_subsets(6, 2), col, 4));
}

TEST_CASE("subset coloring palette equals the chromatic number") {
    CHECK(kneser_upper_coloring(5, 2).palette() == 3);
    CHECK(kneser_upper_coloring(5, 3).palette() == 1);
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= std::min(4, n); ++k) {
            auto c = kneser_upper_coloring(n, k);
            CHECK(c.palette() == std::max(1, n - 2 * k + 2));
            CHECK(c.palette() == brute_chromatic(kneser_subsets(n, k).graph));
        }
}

TEST_CASE("improper colorings are rejected") {
    auto kg = kneser_subsets(5, 2);
    CHECK_THROWS_AS(Coloring(kg, std::vector<int>(10, 0), 1), ImproperColoring);
    CHECK_THROWS_AS(Coloring(kg, std::vector<int>(9, 0), 1), ImproperColoring);
    auto good = kneser_upper_coloring(5, 2).colors();
    CHECK_THROWS_AS(Coloring(kg, good, 2), ImproperColoring);
    CHECK_NOTHROW(Coloring(kg, good, 3));
}

TEST_CASE("minimal non-faces: lemma against brute force") {
    // k-skeleton of Δ_n: all (k+2)-subsets.
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k < n; ++k) {
            auto skel = kneser_subsets(n + 1, k + 1).members;
            CHECK(complex_minimal_nonfaces(n + 1, skel) == kneser_subsets(n + 1, k + 2).members);
        }
    for (auto parts : std::vector<std::vector<int>>{{1, 1}, {2, 2}, {1, 2}, {3, 2}, {1, 1, 2}, {2, 2, 2}, {1, 4}, {3, 3}}) {
        ProductShape shape(parts);
        for (int k = 0; k <= shape.n(); ++k) {
            std::vector<BlockSet> faces;
            for (const auto& f : comb::complex_K(shape, k).members) faces.push_back(flatten(shape, f));
            std::vector<BlockSet> lemma;
            for (const auto& g : comb::minimal_nonfaces(shape, k).members) lemma.push_back(flatten(shape, g));
            std::sort(lemma.begin(), lemma.end());
            CHECK(complex_minimal_nonfaces(shape.m(), faces) == lemma);
        }
    }
}

TEST_CASE("Sarkaria bound") {
    // k-skeleton of Δ_n with the subset coloring: 2k+1.
    for (int n = 3; n <= 8; ++n)
        for (int k = 0; 2 * k + 2 <= n; ++k) {
            auto Z = kneser_subsets(n + 1, k + 2);
            CHECK(sarkaria_bound(n + 1, Z.members, kneser_upper_coloring(n + 1, k + 2)) == 2 * k + 1);
        }
    // Pentagon boundary: Z is the five diagonals, KG(Z) a 5-cycle.
    std::vector<BlockSet> edges;
    for (int i = 0; i < 5; ++i) {
        BlockSet e(1);
        e.insert(0, i);
        e.insert(0, (i + 1) % 5);
        edges.push_back(e);
    }
    auto Z = complex_minimal_nonfaces(5, edges);
    REQUIRE(Z.size() == 5);
    for (const auto& z : Z) CHECK(z.size() == 2);
    auto kg = kneser_graph(Z);
    CHECK(kg.graph.edge_count() == 5);
    auto c = optimal(kg);
    CHECK(c.palette() == 3);
    CHECK(sarkaria_bound(5, Z, c) == 1);
    CHECK(sarkaria_bound(5, Z, c) <= 2);
    // Edgeless Kneser graph, one color.
    auto tri = kneser_subsets(4, 3);
    CHECK(sarkaria_bound(4, tri.members, Coloring(tri, std::vector<int>(4, 0), 1)) == 2);
    CHECK_THROWS_AS(sarkaria_bound(5, kneser_subsets(5, 2).members, c), ImproperColoring);
}

TEST_CASE("Sanyal bound") {
    ProductShape sq({2, 2});
    auto Z = comb::minimal_nonfaces(sq, 0).members;
    auto kg = kneser_graph(Z);
    CHECK(kg.graph.size() == 6);
    CHECK(kg.graph.edge_count() == 9);
    CHECK(brute_chromatic(kg.graph) == 2);
    CHECK(sanyal_bound(sq, 0, optimal(kg)) == 3);
    CHECK(sanyal_bound(sq, 0, optimal(kg), true) == 2);
    for (int n = 2; n <= 8; ++n)
        for (int k = 0; 2 * k + 2 <= n; ++k) {
            ProductShape s({n});
            auto c = coloring_small_k(s, k, {k});
            CHECK(c.palette() == n - 2 * k - 1);
            CHECK(sanyal_bound(s, k, c) == 2 * k + 2);
        }
    CHECK_THROWS_AS(sanyal_bound(sq, 1, optimal(kg)), ImproperColoring);
    // The entire-boundary case needs d = k + 1 = n.
    CHECK_FALSE(entire_boundary_possible(sq, 1, 2));
    CHECK(entire_boundary_possible(sq, 3, 4));
    for (auto parts : std::vector<std::vector<int>>{{2, 2}, {1, 3}, {4}})
        for (int k = 0; k < 3; ++k)
            for (int d = 0; d < ProductShape(parts).n(); ++d) CHECK_FALSE(entire_boundary_possible(ProductShape(parts), k, d));
}

TEST_CASE("small-k coloring") {
    CHECK(coloring_small_k(ProductShape({2, 2}), 0, {0, 0}).palette() == 2);
    auto seg = coloring_small_k(ProductShape({1, 1}), 0, {0, 0});
    CHECK(seg.members().size() == 2);
    CHECK(seg.palette() == 2);
    CHECK_THROWS_AS(coloring_small_k(ProductShape({3, 3}), 1, {1, 0}), InvalidPartition);
    CHECK_THROWS_AS(small_k_tuple(ProductShape({3, 3}), 1), InvalidPartition);
    CHECK_THROWS_AS(coloring_small_k(ProductShape({4, 1}), 1, {0, 1}), InvalidPartition);
    for (auto parts : partitions_up_to(9)) {
        ProductShape shape(parts);
        const int R = static_cast<int>(shape.non_segments().size());
        for (int k = 0; k <= small_k_range(shape); ++k) {
            if (comb::minimal_nonfaces(shape, k).members.size() > 500) continue;
            auto c = coloring_small_k(shape, k, small_k_tuple(shape, k));
            CHECK(c.palette() == shape.n() - 2 * k - R);
            CHECK(sanyal_bound(shape, k, c) == 2 * k + R + 1);
        }
    }
}

TEST_CASE("large-k coloring") {
    CHECK(sanyal_bound(ProductShape({2, 2}), 2, coloring_large_k(ProductShape({2, 2}), 2)) == 4);
    CHECK(sanyal_bound(ProductShape({1, 1}), 1, coloring_large_k(ProductShape({1, 1}), 1)) == 2);
    for (auto parts : partitions_up_to(7)) {
        ProductShape shape(parts);
        for (int k = shape.n() / 2; k <= shape.n(); ++k) {
            auto c = coloring_large_k(shape, k);
            CHECK(sanyal_bound(shape, k, c) == shape.n());
        }
        CHECK(coloring_large_k(shape, shape.n()).members().empty());
    }
    CHECK_THROWS_AS(coloring_large_k(ProductShape({4, 4}), 3), InvalidPartition);
}

TEST_CASE("better coloring remark") {
    CHECK(better_coloring_check(ProductShape({4, 2}), 2));
    CHECK_FALSE(better_coloring_check(ProductShape({3, 3}), 2));
    CHECK_FALSE(better_coloring_check(ProductShape({1, 1}), 0));
    // When it fires, KG(Z) is edgeless and one color gives the trivial bound.
    for (auto parts : partitions_up_to(8)) {
        ProductShape shape(parts);
        for (int k = 0; k <= shape.n(); ++k) {
            if (!better_coloring_check(shape, k)) continue;
            auto Z = comb::minimal_nonfaces(shape, k).members;
            auto kg = kneser_graph(Z);
            CHECK(kg.graph.edge_count() == 0);
            CHECK(sanyal_bound(shape, k, Coloring(kg, std::vector<int>(Z.size(), 0), 1)) == shape.n());
        }
    }
}

TEST_CASE("all-k theorem: partitions and examples") {
    for (auto parts : partitions_up_to(9)) {
        ProductShape shape(parts);
        const auto S = shape.segments();
        const int R = static_cast<int>(shape.non_segments().size());
        const int range = small_k_range(shape) + std::max(0, (static_cast<int>(S.size()) - 1) / 2);
        for (int k = 0; k <= range; ++k) CHECK(bound_all_k(shape, k, S) == 2 * k + R + 1);
        std::vector<int> all(static_cast<std::size_t>(shape.r()));
        for (int i = 0; i < shape.r(); ++i) all[static_cast<std::size_t>(i)] = i;
        for (int k = shape.n() / 2; k <= shape.n() + 1; ++k) CHECK(bound_all_k(shape, k, all) == shape.n());
    }
    ProductShape s33({3, 3});
    std::vector<int> expect{3, 4, 5, 6, 6, 6, 6};
    for (int k = 0; k < 7; ++k) CHECK(best_lower_bound(s33, k).value == expect[static_cast<std::size_t>(k)]);
    // Cross-check at k = 0 with the exact chromatic number of KG(Z).
    auto kg = kneser_graph(comb::minimal_nonfaces(s33, 0).members);
    CHECK(sanyal_bound(s33, 0, optimal(kg)) == 3);
    CHECK_THROWS_AS(bound_all_k(ProductShape({1, 2}), 0, std::vector<int>{1}), InvalidPartition);
    PartitionChoice bad{{0}, {1}, {2}, 0};
    CHECK_THROWS_AS(bound_all_k(ProductShape({4, 1}), 2, bad), InvalidPartition);
    PartitionChoice over{{0}, {1}, {1}, 1};
    CHECK_THROWS_AS(validate_partition(ProductShape({4, 1}), 1, over), InvalidPartition);
}

TEST_CASE("closed form, greedy and exhaustive allocations agree") {
    int mismatches = 0;
    for (auto parts : partitions_up_to(12)) {
        ProductShape shape(parts);
        for (const auto& B : all_B(shape))
            for (int k = 0; k <= shape.n() + 1; ++k) {
                const int closed = bound_all_k(shape, k, B);
                auto g = allocate_greedy(shape, k, B);
                auto e = allocate_exhaustive(shape, k, B);
                validate_partition(shape, k, g);
                validate_partition(shape, k, e);
                if (partition_d_k(shape, g) != closed || partition_d_k(shape, e) != closed) ++mismatches;
            }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("merged colorings are proper with the predicted palette") {
    for (auto parts : partitions_up_to(8)) {
        ProductShape shape(parts);
        for (int k = 0; k <= shape.n(); ++k) {
            if (comb::minimal_nonfaces(shape, k).members.size() > 500) continue;
            for (const auto& B : all_B(shape)) {
                auto p = allocate_greedy(shape, k, B);
                auto c = coloring_partition(shape, k, p);
                CHECK(c.palette() == partition_chi(shape, p));
                CHECK(sanyal_bound(shape, k, c) == partition_d_k(shape, p));
            }
        }
    }
}

TEST_CASE("exact chromatic number dominates the constructed colorings") {
    for (auto parts : partitions_up_to(6)) {
        ProductShape shape(parts);
        for (int k = 0; k <= shape.n(); ++k) {
            auto Z = comb::minimal_nonfaces(shape, k).members;
            if (Z.size() > 20) continue;
            auto kg = kneser_graph(Z);
            auto oracle = optimal(kg);
            for (const auto& B : all_B(shape)) {
                auto c = coloring_partition(shape, k, allocate_greedy(shape, k, B));
                CHECK(brute_chromatic(kg.graph) <= c.palette());
                CHECK(sanyal_bound(shape, k, oracle) >= sanyal_bound(shape, k, c));
            }
        }
    }
}

TEST_CASE("best lower bound") {
    ProductShape sq({2, 2});
    CHECK(best_lower_bound(sq, 0).value == 3);
    CHECK(best_lower_bound(sq, 1).value == 3);
    CHECK(best_lower_bound(sq, 2).value == 4);
    CHECK(best_lower_bound(sq, 0).curve == CurveCase::D);
    for (int k = 0; k <= 2; ++k) CHECK(best_lower_bound(ProductShape({4, 4}), k).value == 2 * k + 3);
    auto lb = best_lower_bound(ProductShape({4, 2}), 2);
    CHECK(lb.theorem_value == 5);
    CHECK(lb.value == 6);
    CHECK(lb.better_coloring);
    CHECK(lb.tag == "better-coloring");
    CHECK(to_char(curve_case(ProductShape({1, 1, 2}))) == 'A');
    CHECK(to_char(curve_case(ProductShape({1, 3}))) == 'B');
    CHECK(to_char(curve_case(ProductShape({3, 2}))) == 'C');
    CHECK(to_char(curve_case(ProductShape({4, 2}))) == 'D');

    for (auto parts : partitions_up_to(10)) {
        ProductShape shape(parts);
        int prev = 0;
        for (int k = 0; k <= shape.n() + 1; ++k) {
            auto b = best_lower_bound(shape, k);
            CHECK(b.value >= prev);
            CHECK(b.value <= shape.n());
            CHECK(partition_d_k(shape, b.witness) == std::min(bound_all_k(shape, k, b.witness.B), shape.n() + 1));
            if (k >= shape.n() / 2) CHECK(b.value == shape.n());
            prev = b.value;
        }
    }
}

TEST_CASE("tightness band of the lower bound") {
    for (int r = 1; r <= 3; ++r) {
        std::vector<int> parts(static_cast<std::size_t>(r), 2);
        while (true) {
            ProductShape shape(parts);
            for (int k = 0; k <= small_k_range(shape); ++k) CHECK(best_lower_bound(shape, k).value == 2 * k + r + 1);
            std::size_t i = 0;
            while (i < parts.size() && parts[i] == 5) parts[i++] = 2;
            if (i == parts.size()) break;
            ++parts[i];
        }
    }
}

TEST_CASE("curve description against the partition search") {
    std::vector<std::vector<int>> failing;
    for (auto parts : partitions_up_to(10)) {
        std::sort(parts.begin(), parts.end());
        if (!check_curve_shape(ProductShape(parts)).pass) failing.push_back(parts);
    }
    // The description predicts 10 at k = 4 for (1,1,2,3,3); every partition gives at most 9.
    CHECK(failing == std::vector<std::vector<int>>{{1, 1, 2, 3, 3}});
    auto c = check_curve_shape(ProductShape({1, 1, 2, 3, 3}));
    CHECK(c.first_mismatch == 4);
    CHECK(c.actual[4] == 9);
    CHECK(c.predicted[4] == 10);
}

TEST_CASE("Rörig–Sanyal comparison") {
    for (int n : {2, 3, 4})
        for (int r : {2, 3}) {
            std::vector<int> parts(static_cast<std::size_t>(r), n);
            ProductShape shape(parts);
            const int K1 = r * ((n - 2) / 2);
            for (int k = 0; k <= K1; ++k) {
                CHECK(rs_case(n, r, k) == 1);
                CHECK(rs_bound(n, r, k) == best_lower_bound(shape, k).value);
            }
            if (n % 2 == 0) {
                auto second = exact::ceil_of(rs_second_case(n, r, K1));
                CHECK(best_lower_bound(shape, K1).value - second == r / 2);
            } else {
                CHECK(rs_second_case(n, r, K1) == 2 * K1 + r + 1);
            }
            // Ours is never weaker.
            for (int k = 0; k < r * n; ++k) CHECK(best_lower_bound(shape, k).value >= exact::ceil_of(rs_bound(n, r, k)));
        }
    CHECK(rs_bound(3, 3, 4) == 7);
    CHECK(rs_bound(3, 3, 1) == 5);
    CHECK(rs_case(3, 3, 1) == 2);
    CHECK(rs_case(4, 2, 5) == 3);
    // One factor: equal bounds below k = n.
    for (int n = 2; n <= 7; ++n)
        for (int k = 0; k < n; ++k) CHECK(exact::ceil_of(rs_bound(n, 1, k)) == best_lower_bound(ProductShape({n}), k).value);
}
