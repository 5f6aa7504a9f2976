#include "psn/cli/commands.hpp"

#include "psn/constructions/cyclic.hpp"
#include "psn/constructions/minkowski.hpp"
#include "psn/deformed/realize.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace psn::cli {

namespace {

struct Outcome {
    int code = kOk;
    json payload;
    std::string text;
};

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

int need(const std::optional<int>& v, const char* flag) {
    if (!v) throw InputError(std::string("missing ") + flag);
    return *v;
}

comb::ProductShape need_shape(const JobSpec& job) {
    if (job.shape.empty()) throw InputError("missing --shape");
    return comb::ProductShape(job.shape);
}

std::string pass_word(bool pass) { return pass ? "PASS" : "FAIL"; }

CommandResult execute(const JobSpec& job, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const cons::ConstructionFailed& e) {
        o = {kRetryCap, json{{"error", e.what()}}, std::string("construction failed: ") + e.what()};
    } catch (const obstr::SizeCapExceeded& e) {
        o = {kInputError, json{{"error", e.what()}}, std::string("size cap: ") + e.what()};
    } catch (const std::invalid_argument& e) {
        o = {kInputError, json{{"error", e.what()}}, std::string("input error: ") + e.what()};
    } catch (const std::out_of_range& e) {
        o = {kInputError, json{{"error", e.what()}}, std::string("input error: ") + e.what()};
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    CommandResult r;
    r.exit_code = o.code;
    r.text = o.text;
    r.envelope = json{{"job", to_json(job)},
                      {"payload", o.payload},
                      {"exact", true},
                      {"version", kToolVersion},
                      {"exit_code", o.code},
                      {"wall_time_ms", static_cast<long>(ms)}};
    return r;
}

cons::IndexSets sequential_sets(const comb::ProductShape& shape) {
    cons::IndexSets sets;
    long next = 0;
    for (int ni : shape.parts()) {
        std::vector<exact::Rational> s;
        for (int j = 0; j <= ni; ++j) s.push_back(exact::Rational(next++));
        sets.push_back(s);
    }
    return sets;
}

json read_json_file(const std::string& path) {
    if (path.empty()) throw InputError("missing --input");
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

// Accepts an envelope, a construct payload or a bare polytope.
hull::LabeledVPolytope polytope_in(const json& j) {
    if (j.contains("payload")) return polytope_in(j.at("payload"));
    if (j.contains("polytope")) return polytope_from_json(j.at("polytope"));
    return polytope_from_json(j);
}

std::string summary(const hull::LabeledVPolytope& p) {
    return std::to_string(p.size()) + " points in dimension " + std::to_string(p.ambient_dim());
}

} // namespace

Caps parse_caps(const std::string& text) {
    Caps c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("caps: expected key=value, got \"" + item + "\"");
        const std::string key = item.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw InputError("caps: bad value in \"" + item + "\"");
        }
        if (value < 0) throw InputError("caps: negative value");
        if (key == "retries") c.retries = value;
        else if (key == "points") c.points = value;
        else throw InputError("caps: unknown key \"" + key + "\"");
    }
    return c;
}

std::vector<int> parse_shape(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument("trailing characters");
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("shape: bad entry \"" + item + "\"");
        }
    }
    if (out.empty()) throw InputError("shape: empty");
    return out;
}

json to_json(const JobSpec& job) {
    auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
    json j{{"command", job.command},
           {"method", job.method},
           {"k", opt(job.k)},
           {"d", opt(job.d)},
           {"n", opt(job.n)},
           {"shape", job.shape},
           {"lambda", job.lambda ? json(*job.lambda) : json(nullptr)},
           {"k_min", job.k_min},
           {"k_max", opt(job.k_max)},
           {"input", job.input},
           {"projection", job.projection},
           {"oracle", job.oracle},
           {"caps", {{"retries", job.caps.retries}, {"points", job.caps.points}}},
           {"out", job.out}};
    j["sabotage"] = job.sabotage ? json{job.sabotage->first, job.sabotage->second} : json(nullptr);
    return j;
}

JobSpec job_from_json(const json& j) {
    auto opt = [&](const char* key) -> std::optional<int> {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        return j.at(key).get<int>();
    };
    JobSpec job;
    try {
        job.command = j.at("command").get<std::string>();
        job.method = j.at("method").get<std::string>();
        job.k = opt("k");
        job.d = opt("d");
        job.n = opt("n");
        job.shape = j.at("shape").get<std::vector<int>>();
        if (!j.at("lambda").is_null()) job.lambda = j.at("lambda").get<std::string>();
        job.k_min = j.at("k_min").get<int>();
        job.k_max = opt("k_max");
        if (!j.at("sabotage").is_null()) {
            auto s = j.at("sabotage").get<std::vector<int>>();
            if (s.size() != 2) throw ParseError("sabotage: expected two entries");
            job.sabotage = std::make_pair(s[0], s[1]);
        }
        job.input = j.at("input").get<std::string>();
        job.projection = j.at("projection").get<bool>();
        job.oracle = j.at("oracle").get<bool>();
        job.caps.retries = j.at("caps").at("retries").get<int>();
        job.caps.points = j.at("caps").at("points").get<int>();
        job.out = j.at("out").get<std::string>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("job: ") + e.what());
    }
    return job;
}

BoundReport compute_bound(const comb::ProductShape& shape, int k) {
    if (k < 0) throw InputError("k must be non-negative");
    BoundReport b;
    b.k = k;
    b.shape = shape;
    b.lower = obstr::best_lower_bound(shape, k);
    std::vector<UpperBound> candidates{{shape.n(), "product"},
                                       {cons::product_of_cyclics_dim(k, shape), "product-of-cyclics"},
                                       {2 * k + shape.r() + 1, "minkowski-tight"},
                                       {deformed::upper_bound_defp(k, shape), "deformed-product"}};
    b.upper = candidates.front();
    for (const auto& c : candidates)
        if (c.value < b.upper.value) b.upper = c;
    b.tight = b.lower.value == b.upper.value;
    return b;
}

CommandResult cmd_construct(const JobSpec& job) {
    return execute(job, [&]() -> Outcome {
        Outcome o;
        const std::string& m = job.method;
        o.payload["method"] = m;
        if (m == "cyclic") {
            const int d = need(job.d, "-d"), n = need(job.n, "-n");
            if (d < 1 || n < d + 1) throw InputError("cyclic: need d ≥ 1 and n ≥ d + 1");
            auto p = cons::cyclic_polytope(cons::default_cyclic(d, n));
            o.payload["dim"] = d;
            o.payload["polytope"] = to_json(p);
            o.text = "cyclic polytope: " + summary(p);
        } else if (m == "product-cyclic") {
            auto shape = need_shape(job);
            const int k = need(job.k, "-k");
            auto r = cons::product_of_cyclics(k, shape);
            o.payload["dim"] = r.dim;
            o.payload["cyclic_blocks"] = r.cyclic_blocks;
            o.payload["polytope"] = to_json(r.polytope);
            o.text = "product of cyclic polytopes: " + summary(r.polytope);
        } else if (m == "reflect") {
            const int k = need(job.k, "-k"), n = need(job.n, "-n");
            cons::ReflectSpec spec{k, n, {}, std::nullopt};
            if (job.lambda) spec.lambda = exact::parse_rational(*job.lambda);
            auto r = cons::reflect_construct(spec);
            o.payload["dim"] = 2 * k + 2;
            o.payload["lambda"] = to_json(r.lambda);
            o.payload["attempts"] = r.attempts;
            o.payload["report"] = to_json(r.report);
            o.payload["polytope"] = to_json(r.polytope);
            o.code = r.report.pass() ? kOk : kVerifyFail;
            o.text = "reflected cyclic polytope: " + summary(r.polytope) + ", " + pass_word(r.report.pass());
        } else if (m == "minkowski") {
            auto shape = need_shape(job);
            const int k = need(job.k, "-k");
            auto sets = sequential_sets(shape);
            auto p = cons::minkowski_simple(k, shape, sets);
            json js = json::array();
            for (const auto& s : sets) {
                json row = json::array();
                for (const auto& x : s) row.push_back(to_json(x));
                js.push_back(row);
            }
            o.payload["dim"] = p.ambient_dim();
            o.payload["index_sets"] = js;
            o.payload["polytope"] = to_json(p);
            o.text = "Minkowski sum of cyclic polytopes: " + summary(p);
        } else if (m == "minkowski-tight") {
            auto shape = need_shape(job);
            const int k = need(job.k, "-k");
            cons::MinkowskiSpec spec{k, shape, {}, 1, job.caps.retries};
            auto r = cons::minkowski_tight(spec);
            json js = json::array();
            for (const auto& s : r.index_sets) {
                json row = json::array();
                for (const auto& x : s) row.push_back(to_json(x));
                js.push_back(row);
            }
            o.payload["dim"] = r.polytope.ambient_dim();
            o.payload["spread"] = to_json(r.spread);
            o.payload["attempts"] = r.attempts;
            o.payload["certified_faces"] = r.certificates.size();
            o.payload["index_sets"] = js;
            o.payload["polytope"] = to_json(r.polytope);
            o.text = "tight Minkowski construction: " + summary(r.polytope) + ", " + std::to_string(r.certificates.size()) +
                     " faces certified";
        } else if (m == "deformed") {
            auto shape = need_shape(job);
            const int k = need(job.k, "-k");
            const int d = job.d ? *job.d : deformed::upper_bound_defp(k, shape);
            auto res = deformed::ppsn_plan(k, shape, d);
            if (!res.feasible) throw InputError("deformed: k exceeds the plan's maximum at this dimension");
            std::size_t count = 1;
            for (int ni : res.sorted_shape.parts()) count *= static_cast<std::size_t>(ni + 1);
            if (count > static_cast<std::size_t>(job.caps.points)) throw InputError("deformed: product has more points than the cap");
            auto real = deformed::realize_small(res.plan, res.sorted_shape, k, job.caps.retries);
            o.payload["dim"] = d;
            o.payload["sorted_shape"] = to_json(res.sorted_shape);
            o.payload["plan"] = to_json(res.plan);
            o.payload["exponent"] = real.exponent;
            o.payload["note"] = real.note;
            if (!real.success) {
                o.code = kRetryCap;
                o.text = "deformed product: best-effort realization failed: " + real.note;
                return o;
            }
            o.payload["report"] = to_json(real.report);
            o.payload["polytope"] = to_json(*real.projected);
            o.text = "deformed product projection: " + summary(*real.projected);
        } else {
            throw InputError("unknown method \"" + m + "\"");
        }
        return o;
    });
}

CommandResult cmd_verify(const JobSpec& job) {
    return execute(job, [&]() -> Outcome {
        auto shape = need_shape(job);
        const int k = need(job.k, "-k");
        auto p = polytope_in(read_json_file(job.input));
        auto report = hull::verify_k_skeleton(p, shape, k, job.projection);
        Outcome o;
        o.payload["report"] = to_json(report);
        o.code = report.pass() ? kOk : kVerifyFail;
        o.text = "verify k=" + std::to_string(k) + " shape " + shape.to_string() + ": " + pass_word(report.pass());
        if (job.oracle) {
            if (p.size() > static_cast<std::size_t>(job.caps.points)) throw InputError("oracle: more points than the cap");
            auto full = hull::restrict_to_affine_hull(p);
            auto ex = hull::verify_k_skeleton_exhaustive(full, shape, k);
            // Without the projection flag only containment is proven, so the oracle may be stricter.
            const bool mismatch = job.projection ? ex.pass() != report.pass() : (ex.pass() && !report.pass());
            o.payload["oracle"] = json{{"report", to_json(ex)}, {"mismatch", mismatch}};
            if (mismatch) {
                o.code = kVerifyFail;
                o.text += " (oracle mismatch)";
            }
        }
        return o;
    });
}

CommandResult cmd_bound(const JobSpec& job) {
    return execute(job, [&]() -> Outcome {
        auto shape = need_shape(job);
        const int k = need(job.k, "-k");
        auto b = compute_bound(shape, k);
        Outcome o;
        o.payload = to_json(b);
        o.text = "shape " + shape.to_string() + " k=" + std::to_string(k) + ": lower " + std::to_string(b.lower.value) +
                 ", upper " + std::to_string(b.upper.value) + (b.tight ? " (tight)" : "");
        if (job.oracle) {
            json checks;
            bool bad = b.lower.value > b.upper.value;
            auto Z = comb::minimal_nonfaces(shape, k).members;
            checks["nonfaces"] = Z.size();
            if (Z.size() <= 5000) {
                auto c = obstr::coloring_partition(shape, k, b.lower.witness);
                const int from_coloring = obstr::sanyal_bound(shape, k, c);
                checks["witness_coloring_bound"] = from_coloring;
                if (std::min(from_coloring, shape.n()) != b.lower.theorem_value) bad = true;
            }
            if (Z.size() <= 20) {
                auto kg = obstr::kneser_graph(Z);
                const int chi = obstr::brute_chromatic(kg.graph);
                const int exact_bound = shape.n() - std::max(chi, 1) + 1;
                checks["exact_chromatic"] = chi;
                checks["exact_bound"] = exact_bound;
                if (b.lower.value > exact_bound) bad = true;
            }
            checks["mismatch"] = bad;
            o.payload["oracle"] = checks;
            if (bad) {
                o.code = kVerifyFail;
                o.text += " (oracle mismatch)";
            }
        }
        return o;
    });
}

CommandResult cmd_table(const JobSpec& job) {
    return execute(job, [&]() -> Outcome {
        auto shape = need_shape(job);
        const int k_max = job.k_max ? *job.k_max : shape.n();
        if (job.k_min < 0 || k_max < job.k_min) throw InputError("table: need 0 ≤ k_min ≤ k_max");
        if (k_max - job.k_min > 200) throw InputError("table: range too large");
        const bool equal = shape.r() >= 2 && std::all_of(shape.parts().begin(), shape.parts().end(), [&](int x) { return x == shape.part(0); });
        Outcome o;
        json rows = json::array();
        json curve = json::array();
        std::ostringstream t;
        t << std::setw(4) << "k" << std::setw(7) << "lower" << std::setw(7) << "upper" << std::setw(7) << "tight";
        if (equal) t << std::setw(7) << "rs";
        t << "  upper witness\n";
        for (int k = job.k_min; k <= k_max; ++k) {
            auto b = compute_bound(shape, k);
            json row{{"k", k}, {"lower", b.lower.value}, {"upper", b.upper.value}, {"tight", b.tight}, {"upper_witness", b.upper.witness}};
            t << std::setw(4) << k << std::setw(7) << b.lower.value << std::setw(7) << b.upper.value << std::setw(7) << (b.tight ? "yes" : "no");
            if (equal) {
                auto rs = obstr::rs_bound(shape.part(0), shape.r(), k);
                row["rs"] = to_json(rs);
                t << std::setw(7) << exact::to_string(rs);
            }
            t << "  " << b.upper.witness << "\n";
            rows.push_back(row);
            curve.push_back(b.lower.value);
        }
        o.payload = json{{"shape", to_json(shape)},
                         {"curve", std::string(1, obstr::to_char(obstr::curve_case(shape)))},
                         {"lower_curve", curve},
                         {"rows", rows}};
        o.text = "shape " + shape.to_string() + ", curve " + std::string(1, obstr::to_char(obstr::curve_case(shape))) + "\n" + t.str();
        return o;
    });
}

CommandResult cmd_certify(const JobSpec& job) {
    return execute(job, [&]() -> Outcome {
        auto shape = need_shape(job);
        const int k = need(job.k, "-k");
        const int d = job.d ? *job.d : deformed::upper_bound_defp(k, shape);
        auto res = deformed::ppsn_plan(k, shape, d);
        auto plan = res.plan;
        if (job.sabotage) plan = deformed::sabotage(plan, job.sabotage->first, job.sabotage->second);
        deformed::PlanCertificate cert;
        try {
            cert = deformed::certify_plan(plan, res.sorted_shape, k);
        } catch (const deformed::PlanWithoutVectors& e) {
            throw InputError(e.what());
        }
        Outcome o;
        o.payload = json{{"d", d},
                         {"feasible", res.feasible},
                         {"sorted_shape", to_json(res.sorted_shape)},
                         {"plan", to_json(plan)},
                         {"certificate", to_json(cert)}};
        o.code = cert.pass ? kOk : kVerifyFail;
        o.text = "certify shape " + res.sorted_shape.to_string() + " k=" + std::to_string(k) + " d=" + std::to_string(d) + ": " +
                 pass_word(cert.pass) + " (" + std::to_string(cert.faces_checked) + " faces, " + std::to_string(cert.failures.size()) +
                 " failures)";
        for (const auto& f : cert.failures) o.text += "\n  failing face " + f.face.to_string();
        return o;
    });
}

CommandResult cmd_oracle(const JobSpec& job) {
    return execute(job, [&]() -> Outcome {
        Outcome o;
        const int k = need(job.k, "-k");
        if (job.shape.empty()) {
            const int n = need(job.n, "-n or --shape");
            auto kg = obstr::kneser_subsets(n, k);
            const int chi = obstr::brute_chromatic(kg.graph);
            const int palette = obstr::kneser_upper_coloring(n, k).palette();
            const bool ok = kg.graph.size() == 0 || chi == palette;
            o.payload = json{{"n", n}, {"k", k}, {"vertices", kg.graph.size()}, {"edges", kg.graph.edge_count()},
                             {"chromatic", chi}, {"palette", palette}, {"match", ok}};
            o.code = ok ? kOk : kVerifyFail;
            o.text = "KG_" + std::to_string(n) + "^" + std::to_string(k) + ": chromatic " + std::to_string(chi) + ", palette " +
                     std::to_string(palette);
            return o;
        }
        auto shape = need_shape(job);
        auto Z = comb::minimal_nonfaces(shape, k).members;
        auto kg = obstr::kneser_graph(Z);
        const int chi = obstr::brute_chromatic(kg.graph);
        int best_palette = -1;
        auto S = shape.segments();
        auto R = shape.non_segments();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << R.size()); ++mask) {
            auto B = S;
            for (std::size_t j = 0; j < R.size(); ++j)
                if (mask >> j & 1) B.push_back(R[j]);
            std::sort(B.begin(), B.end());
            auto c = obstr::coloring_partition(shape, k, obstr::allocate_greedy(shape, k, B));
            if (best_palette < 0 || c.palette() < best_palette) best_palette = c.palette();
        }
        const bool ok = chi <= best_palette;
        o.payload = json{{"shape", to_json(shape)}, {"k", k}, {"nonfaces", Z.size()}, {"edges", kg.graph.edge_count()},
                         {"chromatic", chi}, {"best_constructed_palette", best_palette},
                         {"exact_bound", shape.n() - std::max(chi, 1) + 1},
                         {"constructed_bound", shape.n() - best_palette + 1}, {"dominance", ok}};
        o.code = ok ? kOk : kVerifyFail;
        o.text = "KG(Z) for shape " + shape.to_string() + " k=" + std::to_string(k) + ": chromatic " + std::to_string(chi) +
                 ", best constructed palette " + std::to_string(best_palette);
        return o;
    });
}

CommandResult run(const JobSpec& job) {
    if (job.command == "construct") return cmd_construct(job);
    if (job.command == "verify") return cmd_verify(job);
    if (job.command == "bound") return cmd_bound(job);
    if (job.command == "table") return cmd_table(job);
    if (job.command == "certify") return cmd_certify(job);
    if (job.command == "oracle") return cmd_oracle(job);
    return execute(job, [&]() -> Outcome { throw InputError("unknown command \"" + job.command + "\""); });
}

json without_timing(json envelope) {
    envelope.erase("wall_time_ms");
    return envelope;
}

} // namespace psn::cli
