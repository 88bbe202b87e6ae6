#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "groups.hpp"

namespace coverlab::covers {

using groups::Bitmask;
using groups::Coset;
using groups::Enumeration;
using groups::FiniteAbelianGroup;
using groups::GroupElement;
using groups::Subgroup;

enum class CoverMode { subgroups, cosets, subsemigroups };

// One cover part: a subgroup, a coset of one, or a subsemigroup (which a
// finite group forces to be a subgroup; the closure is taken additively and
// the coincidence checked downstream).
struct CoverPart {
  Subgroup subgroup;
  std::optional<GroupElement> shift;  // engaged in coset mode
  Bitmask mask;                       // element set of the part

  static CoverPart from_subgroup(Subgroup s);
  static CoverPart from_coset(Coset c);
};

struct CoverProblem {
  FiniteAbelianGroup group;
  CoverMode mode = CoverMode::subgroups;
  std::vector<CoverPart> parts;
  std::uint64_t bound = groups::kDefaultEnumerationBound;
};

struct CoverReport {
  bool covered = false;
  bool proper = false;
  // part index -> element that only this part covers; complete iff proper
  std::map<std::size_t, GroupElement> missing_after_removal;
  std::optional<GroupElement> uncovered_witness;
};

// covered iff the union is the whole group; proper iff covered and every
// leave-one-out union misses something (witness recorded per part).
// Errors: TooFewParts (< 2), ImproperPart (a part equal to the group).
CoverReport verify_proper_union(const CoverProblem& problem);

struct MinimalCoverResult {
  bool found = false;
  std::size_t k = 0;
  std::vector<Subgroup> cover;
  // When no cover exists the group is cyclic; this is a generator lying in
  // no proper subgroup.
  std::optional<GroupElement> nocover_generator;
};

// Least k admitting a proper union by k proper subgroups. Searches maximal
// subgroups only (any cover coarsens to one by maximal parts without
// changing existence or the minimum) with iterative deepening and
// branch-on-uncovered-element.
MinimalCoverResult minimal_subgroup_cover(const FiniteAbelianGroup& g,
                                          std::uint64_t bound = groups::kDefaultEnumerationBound);

struct ConstructedCover {
  bool found = false;
  Int prime = 0;
  std::vector<Subgroup> cover;  // p + 1 index-p subgroups
  std::optional<GroupElement> nocover_generator;
};

// For noncyclic G: take the least prime p with rank(G/pG) >= 2, project onto
// two coordinates divisible by p, and pull back the p+1 order-p subgroups of
// the rank-2 quotient. The output verifies as a proper union of size p+1.
ConstructedCover construct_subgroup_cover(const FiniteAbelianGroup& g,
                                          std::uint64_t bound = groups::kDefaultEnumerationBound);

struct SubsemigroupCoverResult {
  MinimalCoverResult result;
  std::uint64_t subsemigroup_count = 0;
  std::uint64_t subgroup_count = 0;  // equal by the finite-group coincidence
};

// Same contract with parts ranging over subsemigroups. Every nonempty
// subsemigroup of a finite group is a subgroup; this enumerates the closed
// sets and asserts the coincidence instead of assuming it.
SubsemigroupCoverResult minimal_subsemigroup_cover(
    const FiniteAbelianGroup& g, std::uint64_t bound = groups::kDefaultEnumerationBound);

// All nonempty addition-closed subsets, canonically ordered.
std::vector<std::vector<std::uint32_t>> enumerate_subsemigroups(
    const FiniteAbelianGroup& g, std::uint64_t bound = groups::kDefaultEnumerationBound);

}  // namespace coverlab::covers
