#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <vector>

#include "bigint.hpp"

namespace coverlab::groups {

using IntMat = std::vector<std::vector<Int>>;
using Bitmask = boost::dynamic_bitset<std::uint64_t>;

// Guard for every operation that materializes element sets.
inline constexpr std::uint64_t kDefaultEnumerationBound = 1u << 12;

// Element of a direct sum of cyclic groups, one residue per factor.
struct GroupElement {
  std::vector<Int> coords;

  auto operator<=>(const GroupElement&) const = default;
};

// Finite abelian group in invariant-factor form: d1 | d2 | ... | dr, di >= 2.
// The empty chain is the trivial group. Immutable after construction.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<Int> invariant_factors);

  // Canonicalizes an arbitrary list of moduli (>= 1, non-chain allowed) into
  // invariant-factor form via the Smith normal form of the diagonal relation
  // matrix. Moduli equal to 1 contribute nothing.
  static FiniteAbelianGroup from_moduli(const std::vector<Int>& moduli);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  const Int& order() const { return order_; }
  std::size_t rank() const { return factors_.size(); }
  bool is_cyclic() const { return factors_.size() <= 1; }
  bool is_trivial() const { return factors_.empty(); }

  GroupElement zero() const;
  GroupElement reduce(std::vector<Int> coords) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(const Int& n, const GroupElement& a) const;

  void check_element(const GroupElement& e) const;

  bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }

 private:
  std::vector<Int> factors_;
  Int order_;
};

// Index arithmetic for enumerated groups. Indices are mixed-radix encodings
// with coordinate 0 most significant, so index order == lexicographic order
// on coordinates.
struct Enumeration {
  std::vector<std::int64_t> moduli;
  std::vector<std::uint64_t> strides;
  std::uint64_t size = 1;

  static Enumeration build(const FiniteAbelianGroup& g,
                           std::uint64_t bound = kDefaultEnumerationBound);

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t index_of(const GroupElement& e) const;
  GroupElement element_at(std::uint32_t idx) const;
};

// Subgroup with its full element set (sorted indices + bitmask) and a
// minimal generating list. Construction enumerates the parent, so it is
// guarded by the enumeration bound.
class Subgroup {
 public:
  static Subgroup from_generators(const FiniteAbelianGroup& g,
                                  const std::vector<GroupElement>& gens,
                                  std::uint64_t bound = kDefaultEnumerationBound);
  static Subgroup from_indices(const FiniteAbelianGroup& g, const Enumeration& en,
                               std::vector<std::uint32_t> sorted_indices);

  const FiniteAbelianGroup& parent() const { return parent_; }
  const Enumeration& enumeration() const { return en_; }
  const std::vector<std::uint32_t>& element_indices() const { return indices_; }
  const Bitmask& mask() const { return mask_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  std::uint64_t order() const { return indices_.size(); }
  bool is_whole_group() const { return indices_.size() == en_.size; }

  bool contains_index(std::uint32_t idx) const { return mask_.test(idx); }
  bool contains(const GroupElement& e) const;

  bool operator==(const Subgroup& o) const {
    return parent_ == o.parent_ && indices_ == o.indices_;
  }

 private:
  Subgroup(FiniteAbelianGroup g, Enumeration en, std::vector<std::uint32_t> idx);

  FiniteAbelianGroup parent_;
  Enumeration en_;
  std::vector<std::uint32_t> indices_;
  Bitmask mask_;
  std::vector<GroupElement> generators_;
};

// Coset rep is canonical: the lexicographically least member. Equality is
// then plain data equality.
class Coset {
 public:
  Coset(Subgroup subgroup, const GroupElement& any_member);

  const Subgroup& subgroup() const { return subgroup_; }
  const GroupElement& representative() const { return rep_; }
  std::uint32_t representative_index() const { return rep_index_; }

  bool contains(const GroupElement& e) const;
  bool contains_index(std::uint32_t idx) const;
  std::vector<std::uint32_t> element_indices() const;

  bool operator==(const Coset& o) const {
    return subgroup_ == o.subgroup_ && rep_ == o.rep_;
  }

 private:
  Subgroup subgroup_;
  GroupElement rep_;
  std::uint32_t rep_index_;
};

struct SmithResult {
  IntMat u;  // unimodular, rows x rows
  IntMat d;  // diagonal, d1 | d2 | ...
  IntMat v;  // unimodular, cols x cols
};

// U * M * V = D with D diagonal, nonnegative, divisibility chain down the
// diagonal. Any integer matrix is accepted, including empty ones.
SmithResult smith_normal_form(const IntMat& m);

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_identity(std::size_t n);
Int mat_det(const IntMat& a);

// Complete duplicate-free subgroup list in canonical order (by order, then
// by element index sequence).
std::vector<Subgroup> subgroups(const FiniteAbelianGroup& g,
                                std::uint64_t bound = kDefaultEnumerationBound);

// Maximal proper subgroups, i.e. the index-p subgroups: kernels of the
// nonzero homomorphisms onto prime-order cyclic groups, one per projective
// functional class.
std::vector<Subgroup> maximal_subgroups(const FiniteAbelianGroup& g,
                                        std::uint64_t bound = kDefaultEnumerationBound);

// Set intersection of two cosets over the same parent: a coset of the
// intersection subgroup, or nothing when disjoint.
std::optional<Coset> coset_intersect(const Coset& c1, const Coset& c2);

// Dimension of G/pG over the p-element field; exact for any group size
// (counts invariant factors divisible by p).
unsigned quotient_rank(const FiniteAbelianGroup& g, const Int& p);

// Addition-only closure of a seed set; in a finite group this lands on the
// generated subgroup, which covers::minimal_subsemigroup_cover asserts
// rather than assumes.
std::vector<std::uint32_t> semigroup_closure(const Enumeration& en,
                                             const std::vector<std::uint32_t>& seed);

std::vector<std::uint32_t> subgroup_closure(const Enumeration& en,
                                            const std::vector<std::uint32_t>& seed);

}  // namespace coverlab::groups
