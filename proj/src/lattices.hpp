#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "bigint.hpp"

namespace coverlab::lattices {

using IntVec = std::vector<Int>;

// Sublattice of Z^n held in row-style Hermite normal form: rows sorted by
// pivot column, pivots positive, entries above a pivot reduced into
// [0, pivot). The HNF is the canonical basis of the lattice.
class Lattice {
 public:
  // Canonical lattice generated by the given vectors (any number, any rank).
  static Lattice from_generators(std::size_t ambient_dim,
                                 const std::vector<IntVec>& generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  bool full_rank() const { return rank() == ambient_; }
  // |det| of the basis when full rank; disengaged otherwise (infinite index).
  std::optional<Int> index() const;

  bool contains(const IntVec& v) const;

  // Canonical representative of v modulo the lattice: pivot coordinates
  // land in [0, pivot)after back-substitution.
  IntVec reduce(IntVec v) const;

  bool operator==(const Lattice& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVec> basis_;
  std::vector<std::size_t> pivots_;
};

struct LatticeCoset {
  Lattice lattice;
  IntVec shift;  // canonical: reduced modulo the lattice

  LatticeCoset(Lattice l, IntVec s);
  bool contains(const IntVec& v) const;
  bool operator==(const LatticeCoset& o) const {
    return lattice == o.lattice && shift == o.shift;
  }
};

struct LatticeCoverReport {
  bool covered = false;
  bool proper = false;
  // Witness vector per part that only that part covers; complete when proper.
  std::vector<std::optional<IntVec>> removal_witnesses;
  std::optional<IntVec> uncovered_witness;
  Int modulus = 0;  // lcm of the indices used by the residue reduction
};

// Exact verification for full-rank cosets: an index-m sublattice contains
// m*Z^n, so membership only depends on residues modulo N = lcm(indices).
// Throws InfiniteIndexMember when a part has rank < n.
LatticeCoverReport verify_lattice_cover_exact(const std::vector<LatticeCoset>& cosets);

// Bounded search for a vector in no coset. Scan order: axis 0 varies
// fastest, each axis running 0, 1, -1, 2, -2, ..., so small nonnegative
// witnesses are preferred. Returns nothing when the box is exhausted.
std::optional<IntVec> refute_lattice_cover_search(std::size_t ambient_dim,
                                                  const std::vector<LatticeCoset>& cosets,
                                                  long box_radius);

struct FiniteIndexCertificate {
  std::size_t member_index = 0;
  Int index_value = 0;
};

struct RefutationWitness {
  IntVec vector;
};

struct Inconclusive {};

using NeumannOutcome = std::variant<FiniteIndexCertificate, RefutationWitness, Inconclusive>;

// Either some member has finite index (certificate for the first such), or
// the family is all infinite-index and a bounded search hunts for a vector
// it misses (such a family can never cover).
NeumannOutcome neumann_certificate(std::size_t ambient_dim,
                                   const std::vector<LatticeCoset>& cosets,
                                   long box_radius);

}  // namespace coverlab::lattices
