#pragma once

#include "psn/cli/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace psn::cli {

inline constexpr const char* kToolVersion = "psnlab 1.0.0";

enum ExitCode { kOk = 0, kVerifyFail = 2, kRetryCap = 3, kInputError = 4 };

struct Caps {
    int retries = 60;
    int points = 30;
};

/// Parses "retries=N,points=M" (either key may be omitted).
Caps parse_caps(const std::string& text);
/// Parses "a,b,c".
std::vector<int> parse_shape(const std::string& text);

struct JobSpec {
    std::string command;          // construct, verify, bound, table, certify, oracle
    std::string method;           // construct only
    std::optional<int> k, d, n;
    std::vector<int> shape;
    std::optional<std::string> lambda; // reflect, as "p/q"
    int k_min = 0;
    std::optional<int> k_max;
    std::optional<std::pair<int, int>> sabotage; // certify: (factor, row)
    std::string input;            // verify: polytope file
    bool projection = false;      // verify: input is a projection of the product
    bool oracle = false;
    Caps caps;
    std::string out;
};

json to_json(const JobSpec& job);
JobSpec job_from_json(const json& j);

struct CommandResult {
    int exit_code = kOk;
    json envelope;     // job echo, payload, exact flag, version, wall time
    std::string text;  // human-readable summary
};

/// Runs one job. Never throws for bad input: errors become exit code 4 with an "error" payload.
CommandResult run(const JobSpec& job);

CommandResult cmd_construct(const JobSpec& job);
CommandResult cmd_verify(const JobSpec& job);
CommandResult cmd_bound(const JobSpec& job);
CommandResult cmd_table(const JobSpec& job);
CommandResult cmd_certify(const JobSpec& job);
CommandResult cmd_oracle(const JobSpec& job);

/// Lower bound, best known upper bound and tightness for (shape, k).
BoundReport compute_bound(const comb::ProductShape& shape, int k);

/// Envelope with the wall time removed, for comparisons.
json without_timing(json envelope);

} // namespace psn::cli
