#pragma once

#include <json.hpp>

#include <string>

#include "covers.hpp"
#include "descriptors.hpp"
#include "lattices.hpp"
#include "witnesses.hpp"

namespace coverlab::io {

using json = nlohmann::json;

// Status values double as CLI exit codes (internal errors are reported to
// CLI users as 3, "input or internal error").
enum class Status : int {
  ok = 0,            // property verified / predicate true
  refuted = 1,       // refuted / predicate false, witness in report
  inconclusive = 2,  // bounded search exhausted
  input_error = 3,
  bound_exceeded = 4,
  internal_error = 5,
};

struct RunResult {
  Status status = Status::ok;
  json report;
};

// JSON integers may arrive as numbers or decimal strings (for values beyond
// 2^53); emission mirrors that rule.
Int int_from_json(const json& v, const char* what);
json int_to_json(const Int& v);

groups::FiniteAbelianGroup parse_group(const json& j);
groups::Subgroup parse_subgroup(const json& j, const groups::FiniteAbelianGroup& g,
                                std::uint64_t bound);
groups::Coset parse_coset(const json& j, const groups::FiniteAbelianGroup& g,
                          std::uint64_t bound);
covers::CoverProblem parse_cover_problem(const json& j);
std::pair<std::size_t, std::vector<lattices::LatticeCoset>> parse_lattice_cover(const json& j);
descriptors::GroupDescriptor parse_descriptor(const json& j);
witnesses::RationalFunction parse_rational_function(const json& j, std::uint32_t p);
witnesses::RefuteRequest parse_refute_request(const json& j);

json element_to_json(const groups::GroupElement& e);
json vector_to_json(const lattices::IntVec& v);
json subgroup_to_json(const groups::Subgroup& s);
json rf_to_json(const witnesses::RationalFunction& f);

// Command runners; each returns the canonical report. Input faults throw
// coverlab::Error.
RunResult run_descriptor_check(const std::string& predicate, const json& descriptor);
RunResult run_group_cover(const std::string& action, const json& problem);
RunResult run_lattice_verify(const json& cover, long box_radius);
RunResult run_zx_verify(std::uint64_t samples, std::uint64_t seed);
RunResult run_units_classify(const std::vector<std::string>& rationals);
RunResult run_field_refute(const json& request);

// Generic dispatcher over {"command": ..., ...} requests.
RunResult run_request(const json& request);

// Canonical JSON bytes: sorted keys, integers only, trailing newline.
std::string render_json(const json& report);

// Human-readable rendering; cites the theorem behind the verdict.
std::string render_text(const json& report);

}  // namespace coverlab::io
