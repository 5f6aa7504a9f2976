#include "doctest.h"

#include "psn/constructions/cyclic.hpp"
#include "psn/constructions/minkowski.hpp"
#include "psn/hull/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace psn;
using namespace psn::cons;
using comb::ProductShape;
using exact::Polynomial;
using exact::Positivity;
using exact::Rational;
using exact::ratio;

namespace {

// Edges of the graph of P, from the face lattice.
std::set<std::pair<comb::Label, comb::Label>> graph_of(const hull::LabeledVPolytope& p) {
    std::set<std::pair<comb::Label, comb::Label>> e;
    for (const auto& f : hull::face_lattice(p))
        if (f.dim == 1 && f.contact.size() == 2) e.insert({p.label(f.contact[0]), p.label(f.contact[1])});
    return e;
}

} // namespace

TEST_CASE("cyclic polytope basics") {
    auto seg = cyclic_polytope({1, {0, 1}});
    CHECK(seg.size() == 2);
    CHECK(seg.point(1) == exact::RatVector{1});
    auto c46 = cyclic_polytope(default_cyclic(4, 6));
    CHECK(c46.size() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) CHECK(hull::certify_face(c46, std::vector<std::size_t>{i, j}).has_value());
    CHECK_THROWS_AS(cyclic_polytope({2, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_polytope({2, {0, 2, 1}}), std::invalid_argument);
}

TEST_CASE("C_{2k+2}(n+1) is (k,n)-PPSN") {
    for (int k = 0; k <= 1; ++k)
        for (int n = 2 * k + 3; n <= 2 * k + 5; ++n) {
            auto p = cyclic_polytope(default_cyclic(2 * k + 2, n + 1));
            auto rep = hull::verify_k_skeleton(p, ProductShape({n}), k, true);
            CHECK(rep.pass());
        }
}

TEST_CASE("Gale evenness agrees with the hull oracle") {
    CHECK(gale_evenness_facets(4, 6).size() == 9);
    CHECK(gale_evenness_facets(3, 4).size() == 4);
    for (int d = 2; d <= 5; ++d)
        for (int n = d + 1; n <= 8; ++n) {
            auto p = cyclic_polytope(default_cyclic(d, n));
            auto facets = hull::enumerate_facets(p);
            std::set<std::vector<int>> oracle;
            std::map<std::vector<int>, int> sign;
            for (const auto& f : facets) {
                std::vector<int> idx;
                for (auto i : f.contact) idx.push_back(p.label(i)[0]);
                oracle.insert(idx);
                sign[idx] = sgn(f.normal.back());
            }
            auto gale = gale_evenness_facets(d, n);
            std::set<std::vector<int>> mine;
            for (const auto& g : gale) {
                mine.insert(g.indices);
                REQUIRE(sign.count(g.indices));
                CHECK(sign[g.indices] == (g.side == FacetSide::Upper ? 1 : -1));
            }
            CHECK(mine == oracle);
            CHECK(mine.size() == gale.size());
        }
}

TEST_CASE("final-block lemma for d = 2k+2") {
    for (int k = 0; k <= 2; ++k)
        for (int n = 2 * k + 3; n <= 7; ++n) CHECK(lower_facet_lemma_violations(k, n).empty());
}

TEST_CASE("product of cyclic polytopes") {
    CHECK(product_of_cyclics_dim(0, ProductShape({3, 3})) == 4);
    CHECK(product_of_cyclics_dim(1, ProductShape({2, 3})) == 5);
    CHECK(product_of_cyclics_dim(1, ProductShape({6})) == 4);
    auto pc = product_of_cyclics(0, ProductShape({3, 3}));
    CHECK(pc.dim == 4);
    CHECK(pc.cyclic_blocks == std::vector<int>{0, 1});
    CHECK(pc.polytope.size() == 16);
    CHECK(hull::verify_k_skeleton(pc.polytope, ProductShape({3, 3}), 0, true).pass());
    auto plain = product_of_cyclics(1, ProductShape({2, 2}));
    CHECK(plain.dim == 4);
    CHECK(plain.cyclic_blocks.empty());
    CHECK(hull::verify_k_skeleton(plain.polytope, ProductShape({2, 2}), 1, true).pass());
    auto mixed = product_of_cyclics(0, ProductShape({1, 3}));
    CHECK(mixed.dim == 3);
    CHECK(hull::verify_k_skeleton(mixed.polytope, ProductShape({1, 3}), 0, true).pass());
}

TEST_CASE("reflect construction k=0 is a hexagon") {
    auto res = reflect_construct({0, 2, {0, 1, 2}, std::nullopt});
    CHECK(res.report.pass());
    CHECK(res.polytope.size() == 6);
    CHECK(res.polytope.ambient_dim() == 2);
    CHECK(hull::enumerate_facets(res.polytope).size() == 6);
}

TEST_CASE("reflect construction k=1, n=4 has the graph of Δ_1 × Δ_4") {
    auto res = reflect_construct({1, 4, {}, std::nullopt});
    REQUIRE(res.report.pass());
    CHECK(res.report.scope == hull::SkeletonScope::Exhaustive);
    CHECK(res.polytope.size() == 10);
    CHECK(res.polytope.ambient_dim() == 4);
    auto edges = graph_of(res.polytope);
    CHECK(edges.size() == 25);
    std::set<std::pair<comb::Label, comb::Label>> expected;
    for (const auto& f : comb::enumerate_k_faces(ProductShape({1, 4}), 1)) {
        auto v = f.vertices();
        expected.insert({v[0], v[1]});
    }
    CHECK(edges == expected);
}

TEST_CASE("reflect with λ = 0 and symmetric parameters fails") {
    auto res = reflect_construct({0, 2, {-1, 0, 1}, Rational(0)});
    CHECK_FALSE(res.report.pass());
}

TEST_CASE("simple Minkowski sum") {
    ProductShape one({3});
    auto p = minkowski_simple(0, one, {{0, 1, 2, 3}});
    CHECK(p.ambient_dim() == 2);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p.point(i) == moment_curve(i, 2));

    ProductShape sq({1, 1});
    IndexSets s11{{0, 1}, {2, 5}};
    auto q = minkowski_simple(0, sq, s11);
    CHECK(q.ambient_dim() == 4);
    CHECK(hull::verify_k_skeleton(q, sq, 0, true).pass());

    ProductShape s22({2, 2});
    IndexSets i22{{0, 1, 2}, {5, 7, 9}};
    auto w = minkowski_simple(1, s22, i22);
    CHECK(w.ambient_dim() == 6);
    CHECK(hull::verify_k_skeleton(w, s22, 1, true).pass());
    CHECK_THROWS_AS(minkowski_simple(0, sq, {{0, 1}, {1, 5}}), std::invalid_argument);
}

TEST_CASE("simple Minkowski certificates and the inner-product identity") {
    ProductShape s22({2, 2});
    IndexSets sets{{0, 1, 2}, {5, 7, 9}};
    const int k = 1;
    auto p = minkowski_simple(k, s22, sets);
    for (int kk = 0; kk <= k; ++kk)
        for (const auto& f : comb::enumerate_k_faces(s22, kk)) {
            auto c = minkowski_face_certificate_simple(k, s22, sets, f);
            CHECK(c.contact == p.indices_of(f.vertices()));
            CHECK(hull::validate_certificate(p, c));
        }
    // ⟨c, v⟩ = Σ_i (f(a_i) − c_0) with f = Π(t − a)^2 over the face {0,2} × {1}.
    std::vector<Rational> roots{0, 0, 2, 2, 7, 7};
    auto f = Polynomial::from_roots(roots);
    exact::RatVector c;
    for (int j = 1; j <= 2 * k + 2 * 2; ++j) c.push_back(f.coeff(static_cast<std::size_t>(j)));
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& lab = p.label(i);
        Rational rhs = 0;
        for (int b = 0; b < 2; ++b) rhs += f(sets[b][lab[b]]) - f.coeff(0);
        CHECK(exact::dot(c, p.point(i)) == rhs);
    }
}

TEST_CASE("Q-system reproduces the two-factor closed forms") {
    auto check = [](const Rational& a, const Rational& b, const Rational& c) {
        auto res = solve_Q_system(1, {{a, b}, {c}});
        REQUIRE(res.status == exact::SolveStatus::Unique);
        Rational alpha = res.blocks[1].q.coeff(1), beta = res.blocks[1].q.coeff(0);
        CHECK(res.blocks[1].q.degree() == 2);
        CHECK(alpha == 2 * (-a - b + c));
        CHECK(beta == a * a + b * b + 3 * c * c + 4 * a * b - 4 * a * c - 4 * b * c);
        CHECK(alpha * alpha - 4 * beta == -8 * (c - a) * (c - b));
        CHECK(res.f == Polynomial::from_roots({a, a, b, b}));
    };
    check(0, 1, 10);
    auto r = solve_Q_system(1, {{0, 1}, {10}});
    CHECK(r.blocks[1].q == Polynomial({261, 18, 1}));
    CHECK(exact::poly_positivity(r.blocks[1].q) == Positivity::PositiveEverywhere);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-40, 40);
    for (int it = 0; it < 60; ++it) {
        Rational a = ratio(d(rng), 1 + std::abs(d(rng)) % 5), b = ratio(d(rng), 1 + std::abs(d(rng)) % 5),
                 c = ratio(d(rng), 1 + std::abs(d(rng)) % 5);
        if (a == b) continue;
        check(a, b, c);
    }
}

TEST_CASE("Q-system identities hold for every block") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-30, 30);
    for (int it = 0; it < 30; ++it) {
        // k = 2, blocks of sizes 2, 2, 1: Σ(|A_i| − 1) = 2.
        std::vector<std::vector<Rational>> blocks{{d(rng), d(rng) + 100}, {200 + d(rng), 300 + d(rng)}, {500 + d(rng)}};
        auto res = solve_Q_system(2, blocks);
        REQUIRE(res.status == exact::SolveStatus::Unique);
        CHECK(res.f.degree() == 6);
        CHECK(res.f.leading() == 1);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            std::vector<Rational> sq;
            for (const auto& a : blocks[i]) sq.insert(sq.end(), {a, a});
            auto rhs = res.blocks[i].q * Polynomial::from_roots(sq) + Polynomial({res.blocks[i].r, res.blocks[i].s});
            CHECK(res.f == rhs);
            CHECK(res.blocks[i].q.leading() == 1);
        }
    }
}

TEST_CASE("collapsed Q-system: f'' equals g and the coefficient transfer holds") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int it = 0; it < 25; ++it) {
        const int k = 2;
        std::vector<int> sizes = it % 2 ? std::vector<int>{3, 1, 1} : std::vector<int>{2, 2, 1};
        std::vector<Rational> anchors{d(rng), 50 + d(rng), 100 + d(rng)};
        std::vector<std::vector<Rational>> blocks;
        for (std::size_t i = 0; i < 3; ++i) blocks.emplace_back(static_cast<std::size_t>(sizes[i]), anchors[i]);
        auto res = solve_Q_system(k, blocks);
        REQUIRE(res.status == exact::SolveStatus::Unique);
        Polynomial g((2 * k + 2) * (2 * k + 1));
        for (std::size_t j = 0; j < 3; ++j) g = g * Polynomial::linear(anchors[j]).pow(static_cast<unsigned>(2 * (sizes[j] - 1)));
        CHECK(res.f.derivative().derivative() == g);
        for (std::size_t i = 0; i < 3; ++i) {
            // R_i = (2k+2)(2k+1) Π_{j≠i}(t − ā_j)^{2(|A_j|−1)}, shifted so that ā_i = 0.
            Polynomial R((2 * k + 2) * (2 * k + 1));
            for (std::size_t j = 0; j < 3; ++j)
                if (j != i) R = R * Polynomial::linear(anchors[j]).pow(static_cast<unsigned>(2 * (sizes[j] - 1)));
            auto Rs = R.shifted(anchors[i]);
            auto Qs = res.blocks[i].q.shifted(anchors[i]);
            const int A = sizes[i];
            for (int j = 0; j <= Qs.degree(); ++j)
                CHECK(Rs.coeff(static_cast<std::size_t>(j)) == (2 * A * (2 * A - 1) + 4 * j * A + j * (j - 1)) * Qs.coeff(static_cast<std::size_t>(j)));
            CHECK(exact::poly_positivity(res.blocks[i].q) == Positivity::PositiveEverywhere);
        }
    }
}

TEST_CASE("tight Minkowski sum k=0, shape (1,1) and (2,2)") {
    auto r11 = minkowski_tight({0, ProductShape({1, 1}), {}, 1, 60});
    CHECK(r11.polytope.size() == 4);
    CHECK(r11.polytope.ambient_dim() == 3);
    CHECK(hull::verify_k_skeleton(r11.polytope, ProductShape({1, 1}), 0, true).pass());

    auto r22 = minkowski_tight({0, ProductShape({2, 2}), {0, 100}, 1, 60});
    CHECK(r22.polytope.size() == 9);
    CHECK(r22.polytope.ambient_dim() == 3);
    CHECK(hull::verify_k_skeleton(r22.polytope, ProductShape({2, 2}), 0, true).pass());
    // Oracle: all nine points are vertices of the hull.
    std::set<std::size_t> on_facets;
    for (const auto& f : hull::enumerate_facets(r22.polytope)) on_facets.insert(f.contact.begin(), f.contact.end());
    CHECK(on_facets.size() == 9);
    for (const auto& c : r22.certificates)
        for (auto v : c.positivity) CHECK(v == Positivity::PositiveEverywhere);
}

TEST_CASE("tight Minkowski sum k=1, shape (2,2) in dimension 5") {
    ProductShape s({2, 2});
    auto res = minkowski_tight({1, s, {}, 1, 60});
    CHECK(res.polytope.ambient_dim() == 5);
    CHECK(res.certificates.size() == comb::enumerate_k_faces(s, 1).size());
    for (const auto& c : res.certificates) {
        hull::FaceCertificate fc{c.normal, c.offset, res.polytope.indices_of(c.face.vertices())};
        CHECK(hull::validate_certificate(res.polytope, fc));
        for (auto v : c.positivity) CHECK(v == Positivity::PositiveEverywhere);
        for (std::size_t i = 0; i < c.system.blocks.size(); ++i) {
            std::vector<Rational> sq;
            for (int j : c.face.parts().block_elements(i)) sq.insert(sq.end(), 2, res.index_sets[i][static_cast<std::size_t>(j)]);
            auto rhs = c.system.blocks[i].q * Polynomial::from_roots(sq) + Polynomial({c.system.blocks[i].r, c.system.blocks[i].s});
            CHECK((c.system.f - rhs).is_zero());
        }
    }
    CHECK(hull::verify_k_skeleton(res.polytope, s, 1, true).pass());
    for (const auto& lab : s.vertices()) {
        auto vc = minkowski_tight_vertex_certificate(1, s, res.index_sets, lab);
        CHECK(hull::validate_certificate(res.polytope, vc));
        CHECK(vc.normal[2] == -1);
    }
}

TEST_CASE("index-set validation") {
    ProductShape s({2, 1});
    CHECK_THROWS_AS(check_index_sets(s, {{0, 1}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(check_index_sets(s, {{0, 1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_NOTHROW(check_index_sets(s, {{0, 1, 2}, {4, 3}}));
    auto sets = clustered_index_sets(s, {10, 20}, ratio(1, 2));
    CHECK(sets[0] == std::vector<Rational>{10, ratio(41, 4), ratio(21, 2)});
    CHECK(sets[1] == std::vector<Rational>{20, ratio(41, 2)});
}
