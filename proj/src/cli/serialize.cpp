#include "psn/cli/serialize.hpp"

namespace psn::cli {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("field \"") + key + "\": " + e.what());
    }
}

json labels_to_json(const std::vector<comb::Label>& labels) {
    json a = json::array();
    for (const auto& l : labels) a.push_back(l);
    return a;
}

std::vector<comb::Label> labels_from_json(const json& j) {
    try {
        return j.get<std::vector<comb::Label>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("labels: ") + e.what());
    }
}

json vectors_to_json(const std::vector<exact::RatVector>& vs) {
    json a = json::array();
    for (const auto& v : vs) {
        json row = json::array();
        for (const auto& x : v) row.push_back(to_json(x));
        a.push_back(row);
    }
    return a;
}

std::vector<exact::RatVector> vectors_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of vectors");
    std::vector<exact::RatVector> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError("expected a vector");
        exact::RatVector v;
        for (const auto& x : row) v.push_back(rational_from_json(x));
        out.push_back(std::move(v));
    }
    return out;
}

obstr::CurveCase curve_from_char(const std::string& s) {
    if (s.size() != 1 || s[0] < 'A' || s[0] > 'D') throw ParseError("curve must be one of A, B, C, D");
    return static_cast<obstr::CurveCase>(s[0] - 'A');
}

hull::SkeletonScope scope_from_string(const std::string& s) {
    for (auto sc : {hull::SkeletonScope::Equivalence, hull::SkeletonScope::Containment, hull::SkeletonScope::Exhaustive})
        if (hull::to_string(sc) == s) return sc;
    throw ParseError("unknown skeleton scope \"" + s + "\"");
}

} // namespace

json to_json(const exact::Rational& q) { return exact::to_string(q); }

exact::Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return exact::Rational(j.get<long>());
    if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string or an integer");
    try {
        return exact::parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(std::string("rational: ") + e.what());
    }
}

json to_json(const hull::LabeledVPolytope& p) {
    return json{{"ambient_dim", p.ambient_dim()}, {"labels", labels_to_json(p.labels())}, {"points", vectors_to_json(p.points())}};
}

hull::LabeledVPolytope polytope_from_json(const json& j) {
    const auto dim = get<std::size_t>(j, "ambient_dim");
    auto labels = labels_from_json(field(j, "labels"));
    auto points = vectors_from_json(field(j, "points"));
    if (labels.size() != points.size()) throw ParseError("polytope: labels and points differ in length");
    hull::LabeledVPolytope p(dim);
    try {
        for (std::size_t i = 0; i < points.size(); ++i) p.add(labels[i], points[i]);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("polytope: ") + e.what());
    }
    return p;
}

json to_json(const comb::ProductShape& s) { return s.parts(); }

comb::ProductShape shape_from_json(const json& j) {
    try {
        return comb::ProductShape(j.get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("shape: ") + e.what());
    } catch (const comb::InvalidShape& e) {
        throw ParseError(std::string("shape: ") + e.what());
    }
}

json to_json(const comb::ProductFace& f) {
    json a = json::array();
    for (std::size_t i = 0; i < f.parts().blocks(); ++i) a.push_back(f.parts().block_elements(i));
    return a;
}

comb::ProductFace face_from_json(const comb::ProductShape& shape, const json& j) {
    std::vector<std::vector<int>> blocks;
    try {
        blocks = j.get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("face: ") + e.what());
    }
    if (static_cast<int>(blocks.size()) != shape.r()) throw ParseError("face: wrong number of blocks");
    comb::BlockSet s(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int v : blocks[i]) {
            if (v < 0 || v > shape.part(static_cast<int>(i))) throw ParseError("face: vertex out of range");
            s.insert(static_cast<int>(i), v);
        }
    try {
        return comb::ProductFace(shape, s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("face: ") + e.what());
    }
}

json to_json(const hull::SkeletonReport& r) {
    json missing = json::array();
    for (const auto& f : r.missing_faces) missing.push_back(to_json(f));
    json unexpected = json::array();
    for (const auto& f : r.unexpected_faces) unexpected.push_back(labels_to_json(f));
    return json{{"verified_k", r.verified_k},
                {"scope", hull::to_string(r.scope)},
                {"pass", r.pass()},
                {"faces_checked", r.faces_checked},
                {"missing_faces", missing},
                {"non_vertex_labels", labels_to_json(r.non_vertex_labels)},
                {"unexpected_faces", unexpected}};
}

hull::SkeletonReport skeleton_report_from_json(const comb::ProductShape& shape, const json& j) {
    hull::SkeletonReport r;
    r.verified_k = get<int>(j, "verified_k");
    r.scope = scope_from_string(get<std::string>(j, "scope"));
    r.faces_checked = get<std::size_t>(j, "faces_checked");
    for (const auto& f : field(j, "missing_faces")) r.missing_faces.push_back(face_from_json(shape, f));
    r.non_vertex_labels = labels_from_json(field(j, "non_vertex_labels"));
    for (const auto& f : field(j, "unexpected_faces")) r.unexpected_faces.push_back(labels_from_json(f));
    if (get<bool>(j, "pass") != r.pass()) throw ParseError("skeleton report: pass flag inconsistent with its faces");
    return r;
}

json to_json(const obstr::PartitionChoice& p) { return json{{"A", p.A}, {"B", p.B}, {"k_A", p.k_A}, {"k_B", p.k_B}}; }

obstr::PartitionChoice partition_from_json(const json& j) {
    obstr::PartitionChoice p;
    p.A = get<std::vector<int>>(j, "A");
    p.B = get<std::vector<int>>(j, "B");
    p.k_A = get<std::vector<int>>(j, "k_A");
    p.k_B = get<int>(j, "k_B");
    return p;
}

json to_json(const BoundReport& b) {
    json lower{{"value", b.lower.value},
               {"theorem_value", b.lower.theorem_value},
               {"witness", to_json(b.lower.witness)},
               {"better_coloring", b.lower.better_coloring},
               {"curve", std::string(1, obstr::to_char(b.lower.curve))},
               {"tag", b.lower.tag}};
    return json{{"k", b.k},
                {"shape", to_json(b.shape)},
                {"lower", lower},
                {"upper", {{"value", b.upper.value}, {"witness", b.upper.witness}}},
                {"tight", b.tight}};
}

BoundReport bound_report_from_json(const json& j) {
    BoundReport b;
    b.k = get<int>(j, "k");
    b.shape = shape_from_json(field(j, "shape"));
    const auto& lo = field(j, "lower");
    b.lower.value = get<int>(lo, "value");
    b.lower.theorem_value = get<int>(lo, "theorem_value");
    b.lower.witness = partition_from_json(field(lo, "witness"));
    b.lower.better_coloring = get<bool>(lo, "better_coloring");
    b.lower.curve = curve_from_char(get<std::string>(lo, "curve"));
    b.lower.tag = get<std::string>(lo, "tag");
    const auto& up = field(j, "upper");
    b.upper.value = get<int>(up, "value");
    b.upper.witness = get<std::string>(up, "witness");
    b.tight = get<bool>(j, "tight");
    return b;
}

json to_json(const deformed::PlanCertificate& c) {
    json failures = json::array();
    for (const auto& f : c.failures) failures.push_back(json{{"face", to_json(f.face)}, {"vectors", vectors_to_json(f.vectors)}});
    return json{{"pass", c.pass},
                {"k", c.k},
                {"faces_checked", c.faces_checked},
                {"min_good", c.min_good},
                {"accounting_ok", c.accounting_ok},
                {"failures", failures}};
}

deformed::PlanCertificate plan_certificate_from_json(const comb::ProductShape& shape, const json& j) {
    deformed::PlanCertificate c;
    c.pass = get<bool>(j, "pass");
    c.k = get<int>(j, "k");
    c.faces_checked = get<std::size_t>(j, "faces_checked");
    c.min_good = get<int>(j, "min_good");
    c.accounting_ok = get<bool>(j, "accounting_ok");
    for (const auto& f : field(j, "failures"))
        c.failures.push_back({face_from_json(shape, field(f, "face")), vectors_from_json(field(f, "vectors"))});
    return c;
}

json to_json(const deformed::DeformedPlan& p) {
    json factors = json::array();
    for (const auto& f : p.factors) {
        json jf{{"n", f.n}, {"m", f.m}};
        jf["chi"] = f.chi ? json(*f.chi) : json(nullptr);
        factors.push_back(jf);
    }
    json rows = json::array();
    for (const auto& r : p.rows)
        rows.push_back(json{{"factor", r.factor}, {"row", r.row}, {"status", deformed::to_string(r.status)}, {"vector", r.vector}, {"role", r.role}});
    json out{{"kind", deformed::to_string(p.kind)},
             {"factors", factors},
             {"d", p.d},
             {"t", p.t},
             {"n", p.n},
             {"m", p.m},
             {"m_bar", p.m_bar},
             {"n_bar", p.n_bar},
             {"chi_bar", p.chi_bar},
             {"alpha", p.alpha},
             {"beta", p.beta},
             {"max_k", p.max_k},
             {"star", p.star},
             {"rows", rows},
             {"note", p.note}};
    if (p.gale)
        out["gale"] = json{{"codim", p.gale->codim}, {"names", p.gale->names}, {"vectors", vectors_to_json(p.gale->vectors)}};
    else
        out["gale"] = nullptr;
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace psn::cli
