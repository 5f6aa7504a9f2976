#include "doctest.h"

#include "psn/cli/commands.hpp"
#include "psn/hull/verify.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace psn;
using namespace psn::cli;
namespace fs = std::filesystem;

namespace {

JobSpec job(std::string command) {
    JobSpec j;
    j.command = std::move(command);
    return j;
}

struct GoldenCase {
    std::string name;
    JobSpec spec;
};

std::vector<GoldenCase> golden_cases() {
    std::vector<GoldenCase> c;
    auto add = [&](std::string name, JobSpec s) { c.push_back({std::move(name), std::move(s)}); };
    {
        auto s = job("construct");
        s.method = "cyclic";
        s.d = 4;
        s.n = 6;
        add("construct_cyclic_d4_n6", s);
    }
    {
        auto s = job("construct");
        s.method = "minkowski-tight";
        s.k = 0;
        s.shape = {2, 2};
        add("construct_minkowski_tight_k0_2_2", s);
    }
    {
        auto s = job("construct");
        s.method = "reflect";
        s.k = 1;
        s.n = 4;
        add("construct_reflect_k1_n4", s);
    }
    {
        auto s = job("construct");
        s.method = "product-cyclic";
        s.k = 0;
        s.shape = {3, 1};
        add("construct_product_cyclic_k0_3_1", s);
    }
    {
        auto s = job("construct");
        s.method = "minkowski";
        s.k = 0;
        s.shape = {1, 2};
        add("construct_minkowski_k0_1_2", s);
    }
    {
        auto s = job("construct");
        s.method = "deformed";
        s.k = 0;
        s.shape = {2, 2};
        add("construct_deformed_k0_2_2", s);
    }
    for (auto [shape, k] : std::vector<std::pair<std::vector<int>, int>>{{{4, 4}, 1}, {{1, 1, 1, 1}, 1}, {{2, 2}, 2}, {{4, 2}, 2}}) {
        auto s = job("bound");
        s.shape = shape;
        s.k = k;
        std::string name = "bound_k" + std::to_string(k);
        for (int x : shape) name += "_" + std::to_string(x);
        add(name, s);
    }
    {
        auto s = job("table");
        s.shape = {3, 3};
        s.k_max = 6;
        add("table_3_3", s);
    }
    {
        auto s = job("table");
        s.shape = {6};
        add("table_6", s);
    }
    {
        auto s = job("certify");
        s.shape = {1, 1, 1, 1};
        s.k = 1;
        s.d = 4;
        add("certify_k1_1_1_1_1_d4", s);
    }
    {
        auto s = job("certify");
        s.shape = {2, 2};
        s.k = 0;
        s.d = 3;
        add("certify_k0_2_2_d3", s);
        s.sabotage = std::make_pair(0, 0);
        add("certify_k0_2_2_d3_sabotaged", s);
    }
    {
        auto s = job("oracle");
        s.n = 5;
        s.k = 2;
        add("oracle_kneser_5_2", s);
    }
    {
        auto s = job("oracle");
        s.shape = {2, 2};
        s.k = 0;
        add("oracle_2_2_k0", s);
    }
    return c;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "psnlab_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

} // namespace

TEST_CASE("golden corpus") {
    const fs::path dir = PSN_GOLDEN_DIR;
    const bool regen = std::getenv("PSN_REGEN_GOLDEN") != nullptr;
    for (const auto& g : golden_cases()) {
        CAPTURE(g.name);
        auto r = run(g.spec);
        auto text = dump(without_timing(r.envelope));
        const auto path = dir / (g.name + ".json");
        if (regen) write_file(path, text);
        REQUIRE(fs::exists(path));
        CHECK(read_file(path) == text);
    }
}

TEST_CASE("golden payloads agree with independent checks") {
    const fs::path dir = PSN_GOLDEN_DIR;
    auto load = [&](const std::string& name) { return parse(read_file(dir / (name + ".json"))); };

    auto mt = load("construct_minkowski_tight_k0_2_2");
    auto p = polytope_from_json(mt["payload"]["polytope"]);
    CHECK(p.size() == 9);
    CHECK(p.ambient_dim() == 3);
    CHECK(hull::verify_k_skeleton_exhaustive(p, comb::ProductShape({2, 2}), 0).pass());

    auto rf = polytope_from_json(load("construct_reflect_k1_n4")["payload"]["polytope"]);
    CHECK(rf.size() == 10);
    CHECK(rf.ambient_dim() == 4);

    auto cy = polytope_from_json(load("construct_cyclic_d4_n6")["payload"]["polytope"]);
    CHECK(cy.size() == 6);
    CHECK(hull::enumerate_facets(cy).size() == 9);

    auto t33 = load("table_3_3")["payload"];
    CHECK(t33["lower_curve"] == json({3, 4, 5, 6, 6, 6, 6}));
    CHECK(t33["rows"][0].contains("rs"));
    auto t6 = load("table_6")["payload"];
    CHECK(t6["lower_curve"] == json({2, 4, 6, 6, 6, 6, 6}));
    CHECK_FALSE(t6["rows"][0].contains("rs"));

    auto b44 = load("bound_k1_4_4")["payload"];
    CHECK(b44["lower"]["value"] == 5);
    CHECK(b44["upper"]["value"] == 5);
    CHECK(b44["tight"] == true);
    auto bseg = load("bound_k1_1_1_1_1")["payload"];
    CHECK(bseg["upper"]["value"] == 4);
    CHECK(bseg["upper"]["witness"] == "product");
    auto six = compute_bound(comb::ProductShape({1, 1, 1, 1, 1, 1}), 1);
    CHECK(six.upper.value == 4);
    CHECK(six.upper.witness == "deformed-product");
    auto b22 = load("bound_k2_2_2")["payload"];
    CHECK(b22["lower"]["value"] == 4);
    CHECK(b22["upper"]["value"] == 4);

    CHECK(load("certify_k0_2_2_d3")["payload"]["certificate"]["pass"] == true);
    auto sab = load("certify_k0_2_2_d3_sabotaged");
    CHECK(sab["exit_code"] == 2);
    CHECK(sab["payload"]["certificate"]["failures"][0]["face"] == json({{2}, {2}}));
}

TEST_CASE("verify command") {
    auto c = job("construct");
    c.method = "minkowski-tight";
    c.k = 0;
    c.shape = {2, 2};
    auto built = run(c);
    REQUIRE(built.exit_code == kOk);
    auto file = scratch("mt.json");
    write_file(file, dump(built.envelope));

    auto v = job("verify");
    v.input = file.string();
    v.shape = {2, 2};
    v.k = 0;
    v.projection = true;
    v.oracle = true;
    auto r = run(v);
    CHECK(r.exit_code == kOk);
    CHECK(r.envelope["payload"]["report"]["pass"] == true);
    CHECK(r.envelope["payload"]["oracle"]["mismatch"] == false);

    // Nine random planar points cannot carry the 1-skeleton of Δ_2 × Δ_2.
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c100(-100, 100);
    hull::LabeledVPolytope planar(2);
    for (const auto& l : comb::ProductShape({2, 2}).vertices()) planar.add(l, {c100(rng), c100(rng)});
    auto pf = scratch("planar.json");
    write_file(pf, dump(to_json(planar)));
    v.input = pf.string();
    v.k = 1;
    v.projection = false;
    v.oracle = false;
    CHECK(run(v).exit_code == kVerifyFail);

    auto cf = scratch("canonical.json");
    write_file(cf, dump(to_json(hull::canonical_product(comb::ProductShape({2, 1})))));
    v.input = cf.string();
    v.shape = {2, 1};
    v.k = 3;
    CHECK(run(v).exit_code == kOk);

    v.input = scratch("missing.json").string();
    CHECK(run(v).exit_code == kInputError);
    auto bad = scratch("bad.json");
    write_file(bad, "{ not json");
    v.input = bad.string();
    CHECK(run(v).exit_code == kInputError);
    v.input = cf.string();
    v.shape = {2, 2};
    CHECK(run(v).exit_code == kInputError);
}

TEST_CASE("exit codes") {
    auto b = job("bound");
    CHECK(run(b).exit_code == kInputError);
    b.shape = {2, 0};
    b.k = 1;
    CHECK(run(b).exit_code == kInputError);
    CHECK(run(job("frobnicate")).exit_code == kInputError);
    auto c = job("construct");
    c.method = "nope";
    CHECK(run(c).exit_code == kInputError);
    c.method = "deformed";
    c.k = 0;
    c.shape = {2, 2};
    c.caps.retries = 0;
    CHECK(run(c).exit_code == kRetryCap);
    c.caps.retries = 40;
    c.caps.points = 4;
    CHECK(run(c).exit_code == kInputError);
    auto cert = job("certify");
    cert.shape = {1, 1, 1, 1, 1, 1};
    cert.k = 1;
    cert.d = 4;
    CHECK(run(cert).exit_code == kInputError);
    CHECK_THROWS(parse_caps("retries=x"));
    CHECK_THROWS(parse_caps("other=1"));
    CHECK(parse_caps("retries=5,points=7").points == 7);
    CHECK(parse_shape("3,1,2") == std::vector<int>{3, 1, 2});
    CHECK_THROWS(parse_shape("3,,2"));
}

TEST_CASE("bound oracle") {
    for (auto shape : std::vector<std::vector<int>>{{2, 2}, {1, 1}, {3, 2}, {4, 2}, {1, 1, 2}}) {
        for (int k = 0; k <= 4; ++k) {
            auto b = job("bound");
            b.shape = shape;
            b.k = k;
            b.oracle = true;
            auto r = run(b);
            CHECK(r.exit_code == kOk);
            CHECK(r.envelope["payload"]["oracle"]["mismatch"] == false);
        }
    }
}

TEST_CASE("serialization round trips") {
    auto same = [](const json& a, const json& b) { return dump(a) == dump(b); };

    auto poly = hull::canonical_product(comb::ProductShape({2, 1}));
    CHECK(same(to_json(polytope_from_json(to_json(poly))), to_json(poly)));
    hull::LabeledVPolytope frac(2);
    frac.add({0}, {exact::ratio(1, 3), exact::ratio(-7, 2)});
    frac.add({1}, {exact::Rational(5), exact::ratio(22, 7)});
    CHECK(polytope_from_json(to_json(frac)) == frac);
    CHECK(to_json(frac)["points"][0][0] == "1/3");

    comb::ProductShape s22({2, 2});
    hull::LabeledVPolytope planar(2);
    int i = 0;
    for (const auto& l : s22.vertices()) {
        planar.add(l, {i, i * i});
        ++i;
    }
    auto rep = hull::verify_k_skeleton(planar, s22, 1, false);
    CHECK_FALSE(rep.pass());
    CHECK(same(to_json(skeleton_report_from_json(s22, to_json(rep))), to_json(rep)));

    for (auto [shape, k] : std::vector<std::pair<std::vector<int>, int>>{{{4, 2}, 2}, {{3, 3}, 1}, {{1, 1, 2}, 0}}) {
        auto b = compute_bound(comb::ProductShape(shape), k);
        CHECK(same(to_json(bound_report_from_json(to_json(b))), to_json(b)));
    }

    auto plan = deformed::ppsn_plan(0, s22, 3);
    auto cert = deformed::certify_plan(deformed::sabotage(plan.plan, 0, 0), plan.sorted_shape, 0);
    CHECK(same(to_json(plan_certificate_from_json(s22, to_json(cert))), to_json(cert)));

    JobSpec j = job("certify");
    j.shape = {2, 2};
    j.k = 0;
    j.sabotage = std::make_pair(1, 2);
    j.lambda = "3/2";
    j.caps = {7, 11};
    CHECK(same(to_json(job_from_json(to_json(j))), to_json(j)));

    for (const auto& g : golden_cases()) {
        auto env = without_timing(run(g.spec).envelope);
        CHECK(same(parse(dump(env)), env));
    }
    CHECK_THROWS_AS(rational_from_json(json("1/0")), ParseError);
    CHECK_THROWS_AS(rational_from_json(json(1.5)), ParseError);
    CHECK_THROWS_AS(polytope_from_json(json{{"ambient_dim", 1}, {"labels", {{0}}}, {"points", json::array()}}), ParseError);
}

TEST_CASE("commands are deterministic") {
    for (const auto& g : golden_cases()) {
        CAPTURE(g.name);
        CHECK(dump(without_timing(run(g.spec).envelope)) == dump(without_timing(run(g.spec).envelope)));
    }
}
