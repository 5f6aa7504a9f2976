#include "psn/cli/commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace psn::cli;

int main(int argc, char** argv) {
    CLI::App app{"Constructions, certificates and dimension bounds for prodsimplicial-neighborly polytopes"};
    app.require_subcommand(1);

    JobSpec job;
    std::string shape_text, caps_text, sabotage_text, format = "json";
    int k = -1, d = -1, n = -1, k_max = -1;
    std::string lambda;

    auto common = [&](CLI::App* sub) {
        sub->add_option("-k", k, "skeleton dimension");
        sub->add_option("--shape", shape_text, "simplex dimensions, comma separated");
        sub->add_option("--out", job.out, "write the result envelope to this file");
        sub->add_option("--caps", caps_text, "retries=N,points=M");
        sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    auto* construct = app.add_subcommand("construct", "build a polytope");
    common(construct);
    construct->add_option("--method", job.method, "cyclic, product-cyclic, reflect, minkowski, minkowski-tight, deformed")->required();
    construct->add_option("-d", d, "dimension");
    construct->add_option("-n", n, "number of points (cyclic) or simplex dimension (reflect)");
    construct->add_option("--lambda", lambda, "reflection parameter as p/q");

    auto* verify = app.add_subcommand("verify", "check that a polytope file has the k-skeleton of the product");
    common(verify);
    verify->add_option("--input", job.input, "polytope or envelope JSON")->required();
    verify->add_flag("--projection", job.projection, "the input is a projection of a polytope equivalent to the product");
    verify->add_flag("--oracle", job.oracle, "cross-check by full face enumeration");

    auto* bound = app.add_subcommand("bound", "lower and upper bounds on the minimal dimension");
    common(bound);
    bound->add_flag("--oracle", job.oracle, "cross-check with the exact chromatic number");

    auto* table = app.add_subcommand("table", "bounds for a range of k");
    common(table);
    table->add_option("--kmin", job.k_min, "first k");
    table->add_option("--kmax", k_max, "last k (default Σn_i)");

    auto* certify = app.add_subcommand("certify", "projection certificate of a deformed product");
    common(certify);
    certify->add_option("-d", d, "target dimension (default: smallest feasible)");
    certify->add_option("--sabotage", sabotage_text, "factor,row whose Gale vector is zeroed");

    auto* oracle = app.add_subcommand("oracle", "exact chromatic number of a Kneser graph");
    common(oracle);
    oracle->add_option("-n", n, "ground set size for KG_n^k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), kInputError);
    }

    job.command = app.get_subcommands().front()->get_name();
    try {
        if (!shape_text.empty()) job.shape = parse_shape(shape_text);
        if (!caps_text.empty()) job.caps = parse_caps(caps_text);
        if (!sabotage_text.empty()) {
            auto s = parse_shape(sabotage_text);
            if (s.size() != 2) throw std::invalid_argument("sabotage: expected factor,row");
            job.sabotage = std::make_pair(s[0], s[1]);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
    if (k >= 0) job.k = k;
    if (d >= 0) job.d = d;
    if (n >= 0) job.n = n;
    if (k_max >= 0) job.k_max = k_max;
    if (!lambda.empty()) job.lambda = lambda;

    auto result = run(job);
    if (!job.out.empty()) {
        std::ofstream out(job.out);
        if (!out) {
            std::cerr << "cannot write " << job.out << "\n";
            return kInputError;
        }
        out << dump(result.envelope);
    }
    if (format == "text") std::cout << result.text << "\n";
    else std::cout << dump(result.envelope);
    if (result.exit_code != kOk) std::cerr << result.text << "\n";
    return result.exit_code;
}
