#pragma once

#include "psn/deformed/plan.hpp"
#include "psn/hull/verify.hpp"
#include "psn/obstructions/bounds.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace psn::cli {

using json = nlohmann::json;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Rationals as "p/q" strings ("p" for integers).
json to_json(const exact::Rational& q);
exact::Rational rational_from_json(const json& j);

json to_json(const hull::LabeledVPolytope& p);
hull::LabeledVPolytope polytope_from_json(const json& j);

json to_json(const comb::ProductShape& s);
comb::ProductShape shape_from_json(const json& j);

/// A product face as its per-block vertex lists.
json to_json(const comb::ProductFace& f);
comb::ProductFace face_from_json(const comb::ProductShape& shape, const json& j);

json to_json(const hull::SkeletonReport& r);
hull::SkeletonReport skeleton_report_from_json(const comb::ProductShape& shape, const json& j);

json to_json(const obstr::PartitionChoice& p);
obstr::PartitionChoice partition_from_json(const json& j);

struct UpperBound {
    int value = 0;
    std::string witness; // construction tag
};

/// Lower and upper bound on the minimal PPSN dimension for (shape, k).
struct BoundReport {
    int k = 0;
    comb::ProductShape shape{std::vector<int>{1}};
    obstr::LowerBound lower;
    UpperBound upper;
    bool tight = false;
};

json to_json(const BoundReport& b);
BoundReport bound_report_from_json(const json& j);

json to_json(const deformed::PlanCertificate& c);
deformed::PlanCertificate plan_certificate_from_json(const comb::ProductShape& shape, const json& j);

/// Counts and rows of a plan; Gale vectors included when present. Serialization only.
json to_json(const deformed::DeformedPlan& p);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);
json parse(const std::string& text);

} // namespace psn::cli
