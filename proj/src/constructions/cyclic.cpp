#include "psn/constructions/cyclic.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace psn::cons {

RatVector moment_curve(const Rational& t, int d) {
    RatVector v(static_cast<std::size_t>(d));
    Rational p = 1;
    for (int j = 0; j < d; ++j) {
        p *= t;
        v[static_cast<std::size_t>(j)] = p;
    }
    return v;
}

hull::LabeledVPolytope cyclic_polytope(const CyclicSpec& spec) {
    if (spec.dim < 1) throw std::invalid_argument("cyclic_polytope: dimension must be positive");
    if (static_cast<int>(spec.params.size()) < spec.dim + 1) throw std::invalid_argument("cyclic_polytope: need at least d+1 parameters");
    for (std::size_t i = 1; i < spec.params.size(); ++i)
        if (!(spec.params[i - 1] < spec.params[i])) throw std::invalid_argument("cyclic_polytope: parameters must increase strictly");
    hull::LabeledVPolytope p(static_cast<std::size_t>(spec.dim));
    for (std::size_t i = 0; i < spec.params.size(); ++i) p.add({static_cast<int>(i)}, moment_curve(spec.params[i], spec.dim));
    return p;
}

CyclicSpec default_cyclic(int dim, int n) {
    CyclicSpec s{dim, {}};
    for (int i = 0; i < n; ++i) s.params.emplace_back(i);
    return s;
}

std::vector<GaleFacet> gale_evenness_facets(int d, int n) {
    if (d < 1 || n < d + 1) throw std::invalid_argument("gale_evenness_facets: need n >= d+1 >= 2");
    std::vector<GaleFacet> out;
    std::vector<int> y;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(y.size()) == d) {
            std::vector<bool> in(static_cast<std::size_t>(n), false);
            for (int v : y) in[static_cast<std::size_t>(v)] = true;
            // Between two consecutive non-members the number of members must be even.
            int prev = -1, between = 0;
            for (int i = 0; i < n; ++i) {
                if (in[static_cast<std::size_t>(i)]) {
                    ++between;
                    continue;
                }
                if (prev >= 0 && between % 2 != 0) return;
                prev = i;
                between = 0;
            }
            int final_block = 0;
            for (int i = n - 1; i >= 0 && in[static_cast<std::size_t>(i)]; --i) ++final_block;
            out.push_back({y, final_block % 2 == 1 ? FacetSide::Upper : FacetSide::Lower});
            return;
        }
        for (int i = start; i + (d - static_cast<int>(y.size())) <= n; ++i) {
            y.push_back(i);
            rec(i + 1);
            y.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<std::vector<int>> lower_facet_lemma_violations(int k, int n) {
    auto low = gale_evenness_facets(2 * k + 1, n);
    auto high = gale_evenness_facets(2 * k + 2, n);
    auto contained = [](const std::vector<int>& s, const std::vector<int>& f) {
        return std::includes(f.begin(), f.end(), s.begin(), s.end());
    };
    std::vector<std::vector<int>> bad;
    std::vector<int> s;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(s.size()) == k + 1) {
            bool face_low = std::any_of(low.begin(), low.end(), [&](const GaleFacet& f) { return contained(s, f.indices); });
            if (face_low) return;
            for (const auto& f : high)
                if (contained(s, f.indices) && f.side == FacetSide::Upper) {
                    bad.push_back(s);
                    return;
                }
            return;
        }
        for (int i = start; i < n; ++i) {
            s.push_back(i);
            rec(i + 1);
            s.pop_back();
        }
    };
    rec(0);
    return bad;
}

int product_of_cyclics_dim(int k, const comb::ProductShape& shape) {
    int d = 0;
    for (int p : shape.parts()) d += p >= 2 * k + 3 ? 2 * k + 2 : p;
    return d;
}

ProductOfCyclics product_of_cyclics(int k, const comb::ProductShape& shape) {
    if (k < 0) throw std::invalid_argument("product_of_cyclics: k must be nonnegative");
    std::vector<std::vector<RatVector>> blocks;
    std::vector<int> cyclic;
    for (int i = 0; i < shape.r(); ++i) {
        int ni = shape.part(i);
        std::vector<RatVector> pts;
        if (ni >= 2 * k + 3) {
            cyclic.push_back(i);
            for (int j = 0; j <= ni; ++j) pts.push_back(moment_curve(Rational(j), 2 * k + 2));
        } else {
            for (int j = 0; j <= ni; ++j) {
                RatVector v(static_cast<std::size_t>(ni));
                if (j > 0) v[static_cast<std::size_t>(j - 1)] = 1;
                pts.push_back(std::move(v));
            }
        }
        blocks.push_back(std::move(pts));
    }
    int dim = product_of_cyclics_dim(k, shape);
    hull::LabeledVPolytope p(static_cast<std::size_t>(dim));
    for (const auto& a : shape.vertices()) {
        RatVector v;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto& b = blocks[i][static_cast<std::size_t>(a[i])];
            v.insert(v.end(), b.begin(), b.end());
        }
        p.add(a, std::move(v));
    }
    return {std::move(p), dim, std::move(cyclic)};
}

hull::LabeledVPolytope reflect_points(int k, const std::vector<Rational>& params, const Rational& lambda) {
    const int d = 2 * k + 2;
    hull::LabeledVPolytope p(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < params.size(); ++i) p.add({0, static_cast<int>(i)}, moment_curve(params[i], d));
    for (std::size_t i = 0; i < params.size(); ++i) {
        RatVector v = moment_curve(params[i], d);
        v.back() = lambda - v.back();
        p.add({1, static_cast<int>(i)}, std::move(v));
    }
    return p;
}

ReflectResult reflect_construct(const ReflectSpec& spec) {
    if (spec.k < 0 || spec.n < 2 * spec.k + 2) throw std::invalid_argument("reflect_construct: need n >= 2k+2");
    std::vector<Rational> t = spec.params;
    if (t.empty())
        for (int i = 0; i <= spec.n; ++i) t.emplace_back(i);
    if (static_cast<int>(t.size()) != spec.n + 1) throw std::invalid_argument("reflect_construct: need n+1 parameters");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!(t[i - 1] < t[i])) throw std::invalid_argument("reflect_construct: parameters must increase strictly");
    comb::ProductShape shape({1, spec.n});

    auto attempt = [&](const Rational& lambda) {
        auto p = reflect_points(spec.k, t, lambda);
        hull::SkeletonReport rep;
        if (hull::affine_dimension(p.points()) != 2 * spec.k + 2) {
            // Degenerate configuration: report every label as failing rather than enumerating.
            rep.verified_k = spec.k;
            rep.scope = hull::SkeletonScope::Exhaustive;
            rep.non_vertex_labels = p.labels();
        } else {
            rep = hull::verify_k_skeleton_exhaustive(p, shape, spec.k);
        }
        return std::make_pair(std::move(p), std::move(rep));
    };

    if (spec.lambda) {
        auto [p, rep] = attempt(*spec.lambda);
        return {std::move(p), *spec.lambda, 1, std::move(rep)};
    }
    Rational mx = 0;
    for (const auto& x : t) mx = std::max(mx, Rational(abs(exact::pow(x, static_cast<unsigned>(2 * spec.k + 2)))));
    Rational lambda = 2 * mx + 1;
    for (int attempt_no = 1; attempt_no <= 21; ++attempt_no) {
        auto [p, rep] = attempt(lambda);
        if (rep.pass()) return {std::move(p), lambda, attempt_no, std::move(rep)};
        lambda *= 2;
    }
    throw ConstructionFailed("reflect_construct: no suitable lambda after 20 doublings");
}

} // namespace psn::cons
