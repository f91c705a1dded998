#pragma once

#include <string>
#include <vector>

#include "relpoly/bns.hpp"
#include "relpoly/splitting.hpp"
#include "relpoly/suites.hpp"

namespace relpoly {

inline constexpr const char* kSchemaVersion = "relpoly/1";

// JSON reports: two-space indent, trailing newline, deterministic key and
// value order, so identical inputs produce byte-identical output.
std::string polytope_json(const PolytopeResult& pr);
std::string bns_membership_json(const PolytopeResult& pr, Direction phi);
std::string bns_arcs_json(const PolytopeResult& pr);
std::string split_json(const PolytopeResult& pr, Direction phi,
                       bool with_witness);

// Human-readable counterparts (multi-line, trailing newline).
std::string polytope_text(const PolytopeResult& pr);
std::string bns_membership_text(const PolytopeResult& pr, Direction phi);
std::string bns_arcs_text(const PolytopeResult& pr);
std::string split_text(const PolytopeResult& pr, Direction phi,
                       bool with_witness);

// Property-suite summary for the check subcommand.
std::string suites_text(const std::vector<SuiteResult>& rs);

// Static SVG 1.1 drawing: the relator's exponent walk, its hull, and the
// marked polytope overlaid at half-integral offset (the drawing convention;
// serialized coordinates stay integral). A rank-one presentation draws only
// the polytope.
std::string polytope_svg(const PolytopeResult& pr);

}  // namespace relpoly
