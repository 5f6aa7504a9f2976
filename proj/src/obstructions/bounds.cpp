#include "psn/obstructions/bounds.hpp"

#include <algorithm>
#include <set>

namespace psn::obstr {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::vector<int> segments_of(const ProductShape& shape) { return shape.segments(); }

bool is_subset_sum(const std::vector<int>& parts, int target) {
    std::set<int> sums{0};
    for (int x : parts) {
        auto copy = sums;
        for (int s : copy) sums.insert(s + x);
    }
    return sums.count(target) > 0;
}

// Coloring of KG(Z) from budgets on blocks A and on the merged block B (no B ⊇ S requirement).
Coloring merged_coloring(const ProductShape& shape, int k, const std::vector<int>& A, const std::vector<int>& k_A,
                         const std::vector<int>& B, int k_B) {
    const auto Z = comb::minimal_nonfaces(shape, k).members;
    std::vector<int> offset(A.size());
    int palette = 0;
    for (std::size_t a = 0; a < A.size(); ++a) {
        offset[a] = palette;
        palette += chi_factor(shape.part(A[a]), k_A[a]);
    }
    int n_B = 0;
    std::vector<int> b_start(static_cast<std::size_t>(shape.r()), 0);
    for (int i : B) {
        b_start[static_cast<std::size_t>(i)] = n_B;
        n_B += shape.part(i);
    }
    const int b_offset = palette;
    palette += chi_block(n_B, k_B);

    std::vector<int> colors;
    for (const auto& G : Z) {
        int color = -1;
        for (std::size_t a = 0; a < A.size() && color < 0; ++a) {
            const int i = A[a];
            auto gi = G.block_elements(static_cast<std::size_t>(i));
            const int need = k_A[a] + 2;
            if (static_cast<int>(gi.size()) < need) continue;
            gi.resize(static_cast<std::size_t>(need));
            color = offset[a] + upper_color(gi, shape.part(i) + 1, need);
        }
        if (color < 0) {
            std::vector<int> g;
            for (int i : B)
                for (int j : G.block_elements(static_cast<std::size_t>(i)))
                    if (j != shape.part(i)) g.push_back(b_start[static_cast<std::size_t>(i)] + j);
            const int need = k_B + 1;
            if (static_cast<int>(g.size()) < need)
                throw std::logic_error("merged coloring: member " + G.to_string() + " fits neither strategy");
            g.resize(static_cast<std::size_t>(need));
            color = b_offset + upper_color(g, n_B, need);
        }
        colors.push_back(color);
    }
    return Coloring(kneser_graph(Z), std::move(colors), std::max(palette, 1));
}

void check_B(const ProductShape& shape, const std::vector<int>& B) {
    std::vector<bool> seen(static_cast<std::size_t>(shape.r()), false);
    for (int i : B) {
        if (i < 0 || i >= shape.r() || seen[static_cast<std::size_t>(i)]) throw InvalidPartition("partition: B is not a subset of [r]");
        seen[static_cast<std::size_t>(i)] = true;
    }
    for (int s : segments_of(shape))
        if (!seen[static_cast<std::size_t>(s)]) throw InvalidPartition("partition: B must contain every segment");
}

} // namespace

std::vector<BlockSet> complex_minimal_nonfaces(int vertices, const std::vector<BlockSet>& facets) {
    if (vertices < 0 || vertices > 20) throw std::invalid_argument("complex_minimal_nonfaces: 0 ≤ vertices ≤ 20");
    auto is_face = [&](std::uint64_t m) {
        return std::any_of(facets.begin(), facets.end(), [&](const BlockSet& f) { return (m & ~f.mask(0)) == 0; });
    };
    std::vector<BlockSet> out;
    const std::uint64_t full = std::uint64_t{1} << vertices;
    for (std::uint64_t m = 1; m < full; ++m) {
        if (is_face(m)) continue;
        bool minimal = true;
        for (int v = 0; v < vertices && minimal; ++v)
            if ((m >> v & 1) && !is_face(m & ~(std::uint64_t{1} << v))) minimal = false;
        if (minimal) out.push_back(BlockSet(std::vector<std::uint64_t>{m}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int sarkaria_bound(int vertex_count, const std::vector<BlockSet>& nonfaces, const Coloring& coloring) {
    if (coloring.members() != nonfaces) throw ImproperColoring("sarkaria_bound: coloring is not on the given minimal non-faces");
    return vertex_count - coloring.palette() - 1;
}

int sanyal_bound(const ProductShape& shape, int k, const Coloring& coloring, bool entire_boundary) {
    if (coloring.members() != comb::minimal_nonfaces(shape, k).members)
        throw ImproperColoring("sanyal_bound: coloring is not on the minimal non-faces of K");
    return shape.n() - coloring.palette() + (entire_boundary ? 0 : 1);
}

bool entire_boundary_possible(const ProductShape& shape, int k, int d) {
    const int dim_q = shape.r() + d - 1;
    const int dim_k = shape.r() + k - 1;
    return dim_k == dim_q - 1 && k == shape.n() - 1;
}

int small_k_range(const ProductShape& shape) {
    int s = 0;
    for (int i : shape.non_segments()) s += (shape.part(i) - 2) / 2;
    return s;
}

std::vector<int> small_k_tuple(const ProductShape& shape, int k) {
    if (k < 0 || k > small_k_range(shape)) throw InvalidPartition("small_k_tuple: k exceeds Σ⌊(n_i−2)/2⌋");
    std::vector<int> ks(static_cast<std::size_t>(shape.r()), 0);
    int left = k;
    for (int i : shape.non_segments()) {
        int take = std::min(left, (shape.part(i) - 2) / 2);
        ks[static_cast<std::size_t>(i)] = take;
        left -= take;
    }
    return ks;
}

Coloring coloring_small_k(const ProductShape& shape, int k, const std::vector<int>& ks) {
    if (static_cast<int>(ks.size()) != shape.r()) throw InvalidPartition("coloring_small_k: one k_i per factor");
    int sum = 0;
    for (int i = 0; i < shape.r(); ++i) {
        const int ki = ks[static_cast<std::size_t>(i)], ni = shape.part(i);
        if (ki < 0) throw InvalidPartition("coloring_small_k: negative k_i");
        if (ni == 1 && ki != 0) throw InvalidPartition("coloring_small_k: k_i must vanish on segments");
        if (ni >= 2 && 2 * ki > ni - 2) throw InvalidPartition("coloring_small_k: 2k_i > n_i − 2");
        sum += ki;
    }
    if (sum != k) throw InvalidPartition("coloring_small_k: Σk_i ≠ k");
    std::vector<int> A(static_cast<std::size_t>(shape.r()));
    for (int i = 0; i < shape.r(); ++i) A[static_cast<std::size_t>(i)] = i;
    return merged_coloring(shape, k, A, ks, {}, 0);
}

Coloring coloring_large_k(const ProductShape& shape, int k, std::size_t member_cap) {
    if (k < shape.n() / 2) throw InvalidPartition("coloring_large_k: requires k ≥ ⌊Σn_i/2⌋");
    auto Z = comb::minimal_nonfaces(shape, k).members;
    if (Z.size() > member_cap) throw SizeCapExceeded("coloring_large_k: too many minimal non-faces to check");
    auto kg = kneser_graph(std::move(Z));
    return Coloring(kg, std::vector<int>(kg.members.size(), 0), 1);
}

bool better_coloring_check(const ProductShape& shape, int k) {
    const int n = shape.n();
    if (n % 2 != 0 || k != n / 2 - 1) return false;
    return !is_subset_sum(shape.parts(), k + 1);
}

int PartitionChoice::n_B(const ProductShape& shape) const {
    int s = 0;
    for (int i : B) s += shape.part(i);
    return s;
}

int PartitionChoice::total_budget() const {
    int s = k_B;
    for (int x : k_A) s += x;
    return s;
}

int chi_factor(int n_i, int k_i) { return 2 * k_i <= n_i - 2 ? n_i - 2 * k_i - 1 : 1; }

int chi_block(int n_B, int k_B) {
    if (n_B == 0) return 0;
    return 2 * k_B <= n_B - 1 ? n_B - 2 * k_B : 1;
}

std::vector<int> complement(const ProductShape& shape, const std::vector<int>& B) {
    std::vector<int> A;
    for (int i = 0; i < shape.r(); ++i)
        if (std::find(B.begin(), B.end(), i) == B.end()) A.push_back(i);
    return A;
}

void validate_partition(const ProductShape& shape, int k, const PartitionChoice& p) {
    check_B(shape, p.B);
    auto A = complement(shape, p.B);
    auto sortedA = p.A;
    std::sort(sortedA.begin(), sortedA.end());
    if (sortedA != A) throw InvalidPartition("partition: A must be the complement of B");
    if (p.k_A.size() != p.A.size()) throw InvalidPartition("partition: one budget per element of A");
    for (std::size_t a = 0; a < p.A.size(); ++a) {
        if (p.k_A[a] < 0) throw InvalidPartition("partition: negative budget");
        if (2 * p.k_A[a] > shape.part(p.A[a]) - 1) throw InvalidPartition("partition: 2k_i > n_i − 1");
    }
    if (p.k_B < 0 || 2 * p.k_B > p.n_B(shape)) throw InvalidPartition("partition: 2k_B > n_B");
    if (p.total_budget() > k) throw InvalidPartition("partition: Σk_i + k_B > k");
}

int partition_chi(const ProductShape& shape, const PartitionChoice& p) {
    int chi = chi_block(p.n_B(shape), p.k_B);
    for (std::size_t a = 0; a < p.A.size(); ++a) chi += chi_factor(shape.part(p.A[a]), p.k_A[a]);
    return chi;
}

int partition_d_k(const ProductShape& shape, const PartitionChoice& p) { return shape.n() + 1 - partition_chi(shape, p); }

Coloring coloring_partition(const ProductShape& shape, int k, const PartitionChoice& p) {
    validate_partition(shape, k, p);
    return merged_coloring(shape, k, p.A, p.k_A, p.B, p.k_B);
}

KValues k_values(const ProductShape& shape, const std::vector<int>& B) {
    check_B(shape, B);
    KValues v;
    int n_B = 0;
    for (int i : B) n_B += shape.part(i);
    for (int i : complement(shape, B)) {
        v.K1 += floor_div(shape.part(i) - 2, 2);
        if (shape.part(i) % 2 == 1) ++v.K2;
    }
    v.K1 += std::max(0, floor_div(n_B - 1, 2));
    if (n_B > 0 && n_B % 2 == 0) ++v.K2;
    return v;
}

int bound_all_k(const ProductShape& shape, int k, const std::vector<int>& B) {
    if (k < 0) throw InvalidPartition("bound_all_k: negative k");
    auto [K1, K2] = k_values(shape, B);
    const int base = shape.r() + 1 - static_cast<int>(B.size());
    if (k <= K1) return base + 2 * k;
    if (k <= K1 + K2) return base + K1 + k;
    return base + 2 * K1 + K2;
}

int bound_all_k(const ProductShape& shape, int k, const PartitionChoice& p) {
    validate_partition(shape, k, p);
    return bound_all_k(shape, k, p.B);
}

PartitionChoice allocate_greedy(const ProductShape& shape, int k, const std::vector<int>& B) {
    check_B(shape, B);
    PartitionChoice p;
    p.B = B;
    std::sort(p.B.begin(), p.B.end());
    p.A = complement(shape, p.B);
    p.k_A.assign(p.A.size(), 0);
    const int n_B = p.n_B(shape);
    for (int step = 0; step < k; ++step) {
        bool done = false;
        for (int gain = 2; gain >= 1 && !done; --gain) {
            for (std::size_t a = 0; a < p.A.size() && !done; ++a) {
                const int ni = shape.part(p.A[a]);
                const int twice = 2 * p.k_A[a];
                if ((gain == 2 && twice <= ni - 4) || (gain == 1 && twice == ni - 3)) {
                    ++p.k_A[a];
                    done = true;
                }
            }
            if (!done && n_B > 0) {
                const int twice = 2 * p.k_B;
                if ((gain == 2 && twice <= n_B - 3) || (gain == 1 && twice == n_B - 2)) {
                    ++p.k_B;
                    done = true;
                }
            }
        }
        if (!done) break;
    }
    return p;
}

PartitionChoice allocate_exhaustive(const ProductShape& shape, int k, const std::vector<int>& B) {
    check_B(shape, B);
    PartitionChoice cur;
    cur.B = B;
    std::sort(cur.B.begin(), cur.B.end());
    cur.A = complement(shape, cur.B);
    cur.k_A.assign(cur.A.size(), 0);
    const int n_B = cur.n_B(shape);
    PartitionChoice best = cur;
    int best_d = partition_d_k(shape, cur);
    // Depth-first over k_A[0], ..., k_A[|A|−1], then k_B.
    auto rec = [&](auto&& self, std::size_t a, int left) -> void {
        if (a == cur.A.size()) {
            for (int kb = 0; kb <= std::min(left, n_B / 2); ++kb) {
                cur.k_B = kb;
                int d = partition_d_k(shape, cur);
                if (d > best_d) {
                    best_d = d;
                    best = cur;
                }
            }
            cur.k_B = 0;
            return;
        }
        const int cap = std::min(left, (shape.part(cur.A[a]) - 1) / 2);
        for (int x = 0; x <= cap; ++x) {
            cur.k_A[a] = x;
            self(self, a + 1, left - x);
        }
        cur.k_A[a] = 0;
    };
    rec(rec, 0, k);
    return best;
}

CurveCase curve_case(const ProductShape& shape) {
    const int s = static_cast<int>(shape.segments().size());
    if (s > 0) return s % 2 == 0 ? CurveCase::A : CurveCase::B;
    for (int x : shape.parts())
        if (x % 2 == 1) return CurveCase::C;
    return CurveCase::D;
}

char to_char(CurveCase c) { return static_cast<char>('A' + static_cast<int>(c)); }

LowerBound best_lower_bound(const ProductShape& shape, int k) {
    if (shape.r() > 20) throw std::invalid_argument("best_lower_bound: r > 20");
    if (k < 0) throw std::invalid_argument("best_lower_bound: negative k");
    const auto S = shape.segments();
    const auto R = shape.non_segments();
    LowerBound lb;
    lb.curve = curve_case(shape);
    int best = -1;
    std::vector<int> best_B;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << R.size()); ++mask) {
        std::vector<int> B = S;
        for (std::size_t j = 0; j < R.size(); ++j)
            if (mask >> j & 1) B.push_back(R[j]);
        std::sort(B.begin(), B.end());
        int v = bound_all_k(shape, k, B);
        if (v > best) {
            best = v;
            best_B = B;
        }
    }
    const int n = shape.n();
    lb.theorem_value = std::min(best, n);
    lb.witness = allocate_greedy(shape, k, best_B);
    lb.value = lb.theorem_value;
    lb.tag = "all-k";
    if (better_coloring_check(shape, k)) {
        lb.better_coloring = true;
        if (n > lb.value) {
            lb.value = n;
            lb.tag = "better-coloring";
        }
    }
    return lb;
}

std::vector<int> predicted_curve(const ProductShape& shape, int k_max) {
    const int n = shape.n();
    const int s = static_cast<int>(shape.segments().size());
    int K1 = small_k_range(shape) + std::max(0, floor_div(s - 1, 2));
    std::vector<int> odd;
    for (int x : shape.parts())
        if (x >= 3 && x % 2 == 1) odd.push_back(x);
    std::vector<int> inc(static_cast<std::size_t>(K1), 2);
    switch (curve_case(shape)) {
    case CurveCase::A:
        for (std::size_t j = 0; j < odd.size(); ++j) inc.insert(inc.end(), {1, 2});
        break;
    case CurveCase::B:
        for (std::size_t j = 0; j < odd.size(); ++j) {
            if (j == 0) inc.push_back(1);
            else inc.insert(inc.end(), {1, 2});
        }
        break;
    case CurveCase::C:
        if (odd.size() >= 2)
            for (std::size_t j = 0; j < odd.size(); ++j) {
                if (j < 2) inc.push_back(1);
                else inc.insert(inc.end(), {1, 2});
            }
        break;
    case CurveCase::D:
        inc.push_back(0);
        break;
    }
    std::vector<int> seq{std::min(n, shape.r() + 1 - s)};
    for (int k = 1; k <= k_max; ++k) {
        const int step = k - 1 < static_cast<int>(inc.size()) ? inc[static_cast<std::size_t>(k - 1)] : 1;
        seq.push_back(std::min(n, seq.back() + step));
    }
    return seq;
}

CurveCheck check_curve_shape(const ProductShape& shape) {
    CurveCheck c;
    const int k_max = shape.n() + 2;
    c.predicted = predicted_curve(shape, k_max);
    for (int k = 0; k <= k_max; ++k) c.actual.push_back(best_lower_bound(shape, k).theorem_value);
    c.pass = c.actual == c.predicted;
    for (std::size_t k = 0; k < c.actual.size(); ++k)
        if (c.actual[k] != c.predicted[k]) {
            c.first_mismatch = static_cast<int>(k);
            break;
        }
    return c;
}

int rs_case(int n, int r, int k) {
    if (n < 1 || r < 1 || k < 0) throw std::invalid_argument("rs_bound: need n, r ≥ 1 and k ≥ 0");
    if (k <= r * floor_div(n - 2, 2)) return 1;
    if (k <= r * floor_div(n - 1, 2)) return 2;
    return 3;
}

exact::Rational rs_second_case(int n, int r, int k) { return exact::Rational(k) + exact::ratio(r * (n - 1), 2) + 1; }

exact::Rational rs_bound(int n, int r, int k) {
    switch (rs_case(n, r, k)) {
    case 1: return exact::Rational(2 * k + r + 1);
    case 2: return rs_second_case(n, r, k);
    default: {
        const int alpha = floor_div(k - r * floor_div(n - 1, 2), floor_div(n + 2, 2));
        return exact::Rational(alpha + r * (n - 1) + 1);
    }
    }
}

} // namespace psn::obstr
