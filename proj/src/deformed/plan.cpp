#include "psn/deformed/plan.hpp"

#include "psn/exact/lp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace psn::deformed {

SimpleFactor SimpleFactor::simplex(int n) {
    if (n < 1) throw std::invalid_argument("simplex: dimension must be positive");
    SimpleFactor f;
    f.n = n;
    f.m = n + 1;
    f.chi = n == 1 ? 1 : n + 1;
    exact::RatMatrix a(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        a(0, static_cast<std::size_t>(j)) = -1;
        a(static_cast<std::size_t>(j + 1), static_cast<std::size_t>(j)) = 1;
    }
    f.facets = a;
    for (int j = 0; j <= n; ++j) f.coloring.push_back(n == 1 ? 0 : j);
    return f;
}

SimpleFactor SimpleFactor::cube(int s) {
    if (s < 1) throw std::invalid_argument("cube: dimension must be positive");
    SimpleFactor f;
    f.n = s;
    f.m = 2 * s;
    f.chi = s;
    exact::RatMatrix a(static_cast<std::size_t>(2 * s), static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j) {
        a(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = -1;
        a(static_cast<std::size_t>(s + j), static_cast<std::size_t>(j)) = 1;
    }
    f.facets = a;
    for (int j = 0; j < 2 * s; ++j) f.coloring.push_back(j % s);
    return f;
}

SimpleFactor SimpleFactor::polygon(int p) {
    if (p < 3) throw std::invalid_argument("polygon: at least three edges");
    SimpleFactor f;
    f.n = 2;
    f.m = p;
    f.chi = p % 2 == 0 ? 2 : 3;
    for (int j = 0; j < p; ++j) f.coloring.push_back(p % 2 == 1 && j == p - 1 ? 2 : j % 2);
    return f;
}

int DeformedPlan::bad_rows() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const PlanRow& r) { return r.status == RowStatus::Bad; }));
}

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int split_index(const std::vector<SimpleFactor>& factors, int d) {
    int t = 0, acc = 0;
    while (t < static_cast<int>(factors.size()) && acc + factors[static_cast<std::size_t>(t)].n <= d) acc += factors[static_cast<std::size_t>(t++)].n;
    return t;
}

namespace {

struct Totals {
    int n = 0, m = 0, t = 0, m_bar = 0, n_bar = 0;
};

Totals totals(const std::vector<SimpleFactor>& factors, int d) {
    Totals x;
    for (const auto& f : factors) {
        if (f.n < 1 || f.m < f.n + 1) throw std::invalid_argument("plan: invalid simple factor");
        x.n += f.n;
        x.m += f.m;
    }
    if (d < 0 || d > x.n) throw std::invalid_argument("plan: target dimension outside [0, n]");
    x.t = split_index(factors, d);
    for (int i = 0; i < x.t; ++i) {
        x.m_bar += factors[static_cast<std::size_t>(i)].m;
        x.n_bar += factors[static_cast<std::size_t>(i)].n;
    }
    return x;
}

void fill_common(DeformedPlan& p, const std::vector<SimpleFactor>& factors, int d, const Totals& x) {
    p.factors = factors;
    p.d = d;
    p.t = x.t;
    p.n = x.n;
    p.m = x.m;
    p.m_bar = x.m_bar;
    p.n_bar = x.n_bar;
}

// Rows for the layouts without Γ: `group(i, row)` gives the shared-g class of a row of a factor i < t.
// The sliced factor t gets g's on its basis rows left of column d and the top row gets g* when `star`.
// Returns the number of g vectors used.
template <class Group>
int lay_out_rows(DeformedPlan& p, Group group, bool star) {
    const auto& fs = p.factors;
    int next_g = 0;
    int col = 0;
    std::vector<std::pair<std::size_t, int>> pending_e; // (row index, τ coordinate)
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        const auto& f = fs[static_cast<std::size_t>(i)];
        const int top = f.m - f.n;
        if (i < p.t) {
            std::map<int, int> cls;
            for (int j = 0; j < f.m; ++j) {
                int c = group(i, j);
                auto it = cls.find(c);
                int v = it == cls.end() ? (cls[c] = next_g++) : it->second;
                p.rows.push_back({i, j, RowStatus::Good, v, "g"});
            }
        } else {
            for (int j = 0; j < f.m; ++j) {
                if (j < top) {
                    if (star && i == p.t && j == 0)
                        p.rows.push_back({i, j, RowStatus::Good, -2, "g*"});
                    else
                        p.rows.push_back({i, j, RowStatus::Bad, -1, "top"});
                    continue;
                }
                int diag = col + (j - top);
                if (diag < p.d) {
                    p.rows.push_back({i, j, RowStatus::Good, next_g++, "g"});
                } else {
                    pending_e.push_back({p.rows.size(), diag - p.d});
                    p.rows.push_back({i, j, RowStatus::Good, -3, "e"});
                }
            }
        }
        col += f.n;
    }
    // Family order: g_1..g_G, e_1..e_codim, g*.
    for (auto [idx, coord] : pending_e) p.rows[idx].vector = next_g + coord;
    for (auto& r : p.rows)
        if (r.vector == -2) r.vector = next_g + (p.n - p.d);
    return next_g;
}

void attach_family(DeformedPlan& p, int g, bool star) {
    if (g == 0 && p.n > p.d) {
        p.note = "no g vectors: the basis vectors alone do not positively span";
        return;
    }
    p.gale = neighborly_gale_family({static_cast<std::size_t>(p.n - p.d), static_cast<std::size_t>(g), star});
}

int max_k_or_full(const DeformedPlan& p, int value) {
    if (p.d == p.n) return p.n;
    return std::min(value, p.n);
}

} // namespace

DeformedPlan plan_basic(const std::vector<SimpleFactor>& factors, int d) {
    Totals x = totals(factors, d);
    DeformedPlan p;
    p.kind = PlanKind::Basic;
    fill_common(p, factors, d, x);
    p.chi_bar = x.m_bar;
    attach_family(p, lay_out_rows(p, [](int, int j) { return j; }, false), false);
    p.alpha = x.m_bar + x.n - x.n_bar - floor_div(x.m_bar + d - x.n_bar - 1, 2);
    p.beta = x.m - x.m_bar - x.n + x.n_bar;
    p.max_k = max_k_or_full(p, x.n - x.m + floor_div(d - 1 + x.m_bar - x.n_bar, 2));
    return p;
}

DeformedPlan plan_colored(const std::vector<SimpleFactor>& factors, int d) {
    Totals x = totals(factors, d);
    DeformedPlan p;
    p.kind = PlanKind::Colored;
    fill_common(p, factors, d, x);
    bool concrete = true;
    for (int i = 0; i < x.t; ++i) {
        const auto& f = factors[static_cast<std::size_t>(i)];
        if (!f.chi) throw MissingChromaticNumber("plan_colored: χ missing for factor " + std::to_string(i));
        p.chi_bar += *f.chi;
        if (static_cast<int>(f.coloring.size()) != f.m) concrete = false;
    }
    if (concrete) {
        attach_family(p, lay_out_rows(p, [&](int i, int j) { return factors[static_cast<std::size_t>(i)].coloring[static_cast<std::size_t>(j)]; }, false), false);
    } else {
        p.note = "no explicit coloring supplied; counts only";
    }
    p.alpha = p.chi_bar + x.n - x.n_bar - floor_div(p.chi_bar + d - x.n_bar - 1, 2);
    p.beta = x.m - x.m_bar - x.n + x.n_bar;
    p.max_k = max_k_or_full(p, x.n - x.m + x.m_bar - p.chi_bar + floor_div(d - 1 + p.chi_bar - x.n_bar, 2));
    return p;
}

int scaling_delta(const DeformedPlan& plan, int i) {
    if (i < plan.t || i >= static_cast<int>(plan.factors.size())) throw std::out_of_range("scaling_delta: factor must come after the split");
    const auto& f = plan.factors[static_cast<std::size_t>(i)];
    if (!f.chi) throw MissingChromaticNumber("scaling_delta: χ missing");
    const int base = plan.m_bar + plan.d - plan.n_bar;
    return f.m - *f.chi + floor_div(base - f.n - 1, 2) - floor_div(base - 1, 2);
}

int BlockLayout::column_start(int factor) const {
    int c = 0;
    for (int i = 0; i < factor; ++i) c += factors[static_cast<std::size_t>(i)].n;
    return c;
}

int BlockLayout::factor_of_column(int column) const {
    int c = 0;
    for (int i = 0; i < static_cast<int>(factors.size()); ++i) {
        c += factors[static_cast<std::size_t>(i)].n;
        if (column < c) return i;
    }
    throw std::out_of_range("factor_of_column");
}

int BlockLayout::diagonal_row(int column) const {
    int i = factor_of_column(column);
    const auto& f = factors[static_cast<std::size_t>(i)];
    return f.m - f.n + (column - column_start(i));
}

namespace {

bool gamma_above(const BlockLayout& l, int column) {
    for (const auto& g : l.gamma_blocks)
        if (std::find(g.columns.begin(), g.columns.end(), column) != g.columns.end()) return true;
    return false;
}

bool gamma_right(const BlockLayout& l, int factor) {
    return std::any_of(l.gamma_blocks.begin(), l.gamma_blocks.end(), [&](const GammaBlock& g) { return g.factor == factor; });
}

} // namespace

std::vector<bool> unnecessary_columns(const BlockLayout& l) {
    int n = l.column_start(static_cast<int>(l.factors.size()));
    std::vector<bool> out(static_cast<std::size_t>(n), false);
    for (int c = 0; c < n; ++c) out[static_cast<std::size_t>(c)] = gamma_right(l, l.factor_of_column(c)) && !gamma_above(l, c);
    return out;
}

std::vector<std::vector<RowStatus>> row_statuses(const BlockLayout& l) {
    std::vector<std::vector<RowStatus>> out;
    for (int i = 0; i < static_cast<int>(l.factors.size()); ++i) {
        const auto& f = l.factors[static_cast<std::size_t>(i)];
        std::vector<RowStatus> rs;
        for (int j = 0; j < f.m; ++j) {
            bool good = (i < static_cast<int>(l.g_covered.size()) && l.g_covered[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ||
                        gamma_right(l, i);
            if (!good && j >= f.m - f.n) good = !gamma_above(l, l.column_start(i) + j - (f.m - f.n));
            rs.push_back(good ? RowStatus::Good : RowStatus::Bad);
        }
        out.push_back(std::move(rs));
    }
    return out;
}

DeformedPlan plan_scaled(const std::vector<SimpleFactor>& factors, int d, int i) {
    DeformedPlan base = plan_basic(factors, d);
    const int r = static_cast<int>(factors.size());
    if (i < base.t + 1 || i + 1 >= r) throw UnsupportedLayout("plan_scaled: Γ needs a factor after the sliced one and a successor");
    const auto& f = factors[static_cast<std::size_t>(i)];
    const auto& next = factors[static_cast<std::size_t>(i + 1)];
    if (!f.chi) throw MissingChromaticNumber("plan_scaled: χ missing");
    if (*f.chi > next.n) throw UnsupportedLayout("plan_scaled: χ_i > n_{i+1} perturbs more than two blocks");
    BlockLayout l;
    l.factors = factors;
    l.d = d;
    l.g_covered.resize(factors.size());
    for (int a = 0; a < r; ++a) l.g_covered[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(factors[static_cast<std::size_t>(a)].m), false);
    for (const auto& row : base.rows)
        if (row.role == "g" || row.role == "g*")
            l.g_covered[static_cast<std::size_t>(row.factor)][static_cast<std::size_t>(row.row)] = true;
    GammaBlock gb{i, {}};
    for (int c = 0; c < *f.chi; ++c) gb.columns.push_back(l.column_start(i + 1) + c);
    l.gamma_blocks.push_back(gb);
    auto status = row_statuses(l);

    DeformedPlan p = base;
    p.kind = PlanKind::Scaled;
    p.gamma_blocks = l.gamma_blocks;
    p.gale.reset();
    p.note = "Γ layout: counts only";
    p.rows.clear();
    for (int a = 0; a < r; ++a)
        for (int j = 0; j < factors[static_cast<std::size_t>(a)].m; ++j) {
            auto st = status[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
            std::string role = l.g_covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] ? "g" : a == i ? "gamma" : j < factors[static_cast<std::size_t>(a)].m - factors[static_cast<std::size_t>(a)].n ? "top" : "basis";
            p.rows.push_back({a, j, st, -1, role});
        }
    p.beta = p.bad_rows();
    p.alpha = p.m_bar + p.n - p.n_bar - f.n - floor_div(p.m_bar + d - p.n_bar - f.n - 1, 2);
    p.max_k = std::min(p.n, p.n - p.beta - p.alpha);
    return p;
}

std::vector<SimpleFactor> order_factors(const std::vector<SimpleFactor>& factors, int d, OrderStrategy strategy) {
    if (strategy == OrderStrategy::AsGiven) return factors;
    if (strategy == OrderStrategy::DecreasingFacets) {
        auto out = factors;
        std::stable_sort(out.begin(), out.end(), [](const SimpleFactor& a, const SimpleFactor& b) { return a.m > b.m; });
        return out;
    }
    if (factors.size() > 6) throw std::invalid_argument("order_factors: exhaustive search is limited to r ≤ 6");
    std::vector<int> perm(factors.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SimpleFactor> best;
    int best_k = 0;
    do {
        std::vector<SimpleFactor> cand;
        for (int i : perm) cand.push_back(factors[static_cast<std::size_t>(i)]);
        int k = plan_colored(cand, d).max_k;
        if (best.empty() || k > best_k) {
            best = cand;
            best_k = k;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

int ppsn_max_k(const comb::ProductShape& shape, int d) {
    auto parts = shape.parts();
    std::sort(parts.begin(), parts.end());
    const int r = shape.r();
    const int s = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
    if (d <= s - 1) return floor_div(d, 2) - r + s - 1;
    int t = 0, acc = 0;
    while (t < r && acc + parts[static_cast<std::size_t>(t)] <= d) acc += parts[static_cast<std::size_t>(t++)];
    return floor_div(d + t - s, 2) - r + s;
}

PpsnPlanResult ppsn_plan(int k, const comb::ProductShape& shape, int d) {
    auto parts = shape.parts();
    std::sort(parts.begin(), parts.end());
    comb::ProductShape sorted(parts);
    const int r = sorted.r();
    const int s = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
    const int n = sorted.n();
    if (d < 0) throw std::invalid_argument("ppsn_plan: negative dimension");
    std::vector<SimpleFactor> factors;
    for (int x : parts) factors.push_back(SimpleFactor::simplex(x));
    DeformedPlan p;
    p.factors = factors;
    p.d = d;
    p.n = n;
    p.m = sorted.m();
    p.max_k = ppsn_max_k(sorted, d);
    if (d <= s - 1) {
        p.kind = PlanKind::PpsnCase1;
        p.t = d;
        p.n_bar = d;
        p.m_bar = 2 * d;
        p.chi_bar = d;
        p.alpha = n - floor_div(d, 2);
        p.beta = r - s + 1;
        p.note = "case d < s: counts only";
        return {k >= 0 && k <= p.max_k, p, sorted};
    }
    p.kind = PlanKind::PpsnCase2;
    p.t = split_index(factors, d);
    for (int i = 0; i < p.t; ++i) {
        p.m_bar += factors[static_cast<std::size_t>(i)].m;
        p.n_bar += factors[static_cast<std::size_t>(i)].n;
        p.chi_bar += *factors[static_cast<std::size_t>(i)].chi;
    }
    if (d > n) {
        p.note = "d > n: counts only";
        p.alpha = 0;
        p.beta = 0;
        return {k >= 0 && k <= p.max_k, p, sorted};
    }
    p.star = p.t < r;
    attach_family(p, lay_out_rows(p, [&](int i, int j) { return factors[static_cast<std::size_t>(i)].coloring[static_cast<std::size_t>(j)]; }, p.star), p.star);
    p.alpha = p.gale ? static_cast<int>(spanning_threshold(*p.gale)) : 0;
    p.beta = p.bad_rows();
    return {k >= 0 && k <= p.max_k, p, sorted};
}

int upper_bound_defp(int k, const comb::ProductShape& shape) {
    auto parts = shape.parts();
    std::sort(parts.begin(), parts.end());
    const int r = shape.r();
    const int s = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
    const int budget = 2 * k + 2 * r;
    if (3 * s <= budget) {
        int t = s, acc = 3 * s;
        while (t < r && acc + parts[static_cast<std::size_t>(t)] + 1 <= budget) acc += parts[static_cast<std::size_t>(t++)] + 1;
        return 2 * (k + r) - s - t;
    }
    if (3 * s == budget + 1) return 2 * (k + r - s) + 1;
    return 2 * (k + r - s + 1);
}

PlanCertificate certify_plan(const DeformedPlan& plan, const comb::ProductShape& shape, int k) {
    if (!plan.gale) throw PlanWithoutVectors("certify_plan: " + (plan.note.empty() ? std::string("plan has no Gale vectors") : plan.note));
    if (static_cast<int>(plan.factors.size()) != shape.r()) throw std::invalid_argument("certify_plan: factor count differs from the shape");
    std::vector<std::size_t> offset;
    std::size_t acc = 0;
    for (int i = 0; i < shape.r(); ++i) {
        const auto& f = plan.factors[static_cast<std::size_t>(i)];
        if (f.n != shape.part(i) || f.m != f.n + 1) throw std::invalid_argument("certify_plan: factors must be the simplices of the shape");
        offset.push_back(acc);
        acc += static_cast<std::size_t>(f.m);
    }
    if (acc != plan.rows.size()) throw std::invalid_argument("certify_plan: row layout does not match the shape");
    PlanCertificate cert;
    cert.k = k;
    cert.min_good = plan.n + 1;
    bool counts_ok = plan.bad_rows() == plan.beta;
    for (const auto& face : comb::enumerate_k_faces(shape, k)) {
        std::vector<RatVector> vecs;
        int good = 0;
        for (int i = 0; i < shape.r(); ++i)
            for (int j = 0; j <= shape.part(i); ++j) {
                if (face.parts().contains(i, j)) continue;
                const auto& row = plan.rows[offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(facet_row(j))];
                if (row.status != RowStatus::Good) continue;
                ++good;
                vecs.push_back(plan.gale->vectors[static_cast<std::size_t>(row.vector)]);
            }
        cert.min_good = std::min(cert.min_good, good);
        if (good < plan.gamma(k)) counts_ok = false;
        ++cert.faces_checked;
        if (!exact::positively_spanning(vecs, plan.gale->codim)) cert.failures.push_back({face, vecs});
    }
    cert.accounting_ok = counts_ok;
    cert.pass = cert.failures.empty();
    return cert;
}

DeformedPlan sabotage(const DeformedPlan& plan, int factor, int row) {
    if (!plan.gale) throw PlanWithoutVectors("sabotage: plan has no Gale vectors");
    DeformedPlan p = plan;
    for (const auto& r : p.rows)
        if (r.factor == factor && r.row == row) {
            if (r.vector < 0) throw std::invalid_argument("sabotage: row carries no vector");
            auto& v = p.gale->vectors[static_cast<std::size_t>(r.vector)];
            for (auto& x : v) x = 0;
            return p;
        }
    throw std::out_of_range("sabotage: no such row");
}

std::string to_string(PlanKind kind) {
    switch (kind) {
    case PlanKind::Basic: return "basic";
    case PlanKind::Colored: return "colored";
    case PlanKind::PpsnCase1: return "ppsn-case-1";
    case PlanKind::PpsnCase2: return "ppsn-case-2";
    case PlanKind::Scaled: return "scaled";
    }
    return "?";
}

std::string to_string(RowStatus s) { return s == RowStatus::Good ? "good" : "bad"; }

} // namespace psn::deformed
