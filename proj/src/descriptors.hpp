#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace coverlab::descriptors {

// Cardinal arithmetic never happens here; predicates only need to tell
// zero / finite / not-finite apart, so symbolic names compare by tag.
struct CardinalTag {
  enum class Kind { finite, countably_infinite, symbolic };

  Kind kind = Kind::finite;
  Int count = 0;      // engaged for finite
  std::string name;   // engaged for symbolic

  static CardinalTag finite(Int n);
  static CardinalTag countable();
  static CardinalTag symbolic(std::string name);

  bool is_zero() const { return kind == Kind::finite && count == 0; }
  bool is_finite() const { return kind == Kind::finite; }

  bool operator==(const CardinalTag&) const = default;
};

// One bounded-torsion family: `mult` copies of the cyclic group of order
// q^k. `unbounded_exponent` marks a symbolic family with no common exponent
// bound; its only role is to falsify the Artinian shape test.
struct TorsionEntry {
  Int q = 2;
  unsigned k = 1;
  bool unbounded_exponent = false;
  CardinalTag mult = CardinalTag::finite(1);

  bool operator==(const TorsionEntry&) const = default;
};

// Symbolic additive group in split form:
//   (rationals ^ rational_rank) + prufer quasicyclic summands + bounded torsion.
struct GroupDescriptor {
  CardinalTag rational_rank = CardinalTag::finite(0);
  std::vector<Int> prufer;  // primes, repetition allowed, finitely many
  std::vector<TorsionEntry> bounded_torsion;  // distinct (q, k) pairs

  void validate() const;
  bool torsion_absent() const;  // no bounded summand with nonzero multiplicity
  bool is_finite_group() const;
  // Moduli list q^k repeated mult times; only for finite descriptors.
  std::vector<Int> finite_moduli() const;

  bool operator==(const GroupDescriptor&) const = default;
};

struct Verdict {
  bool value = false;
  std::string clause;  // stable id of the single deciding clause
  std::string detail;
};

// Additive shape of an Artinian ring: finitely many quasicyclic summands and
// bounded-torsion exponents q^k admitting a common bound m (automatic for a
// finite entry list without the unbounded flag). With m_bound, additionally
// checks every q^k divides it.
Verdict is_artinian_additive(const GroupDescriptor& d, std::optional<Int> m_bound = {});

// Not a proper union of subgroups <=> divisible + finite cyclic: bounded
// part has finite total multiplicity and at most one summand per prime.
// Requires the Artinian shape (PreconditionFailed otherwise).
Verdict theorem1_not_proper_union(const GroupDescriptor& d);

// Not a proper union of cosets <=> divisible: bounded torsion absent.
Verdict corollary1_not_coset_union(const GroupDescriptor& d);

// Divisible + torsion with no proper finite-index subgroup; in this grammar
// every quasicyclic summand qualifies and any bounded summand fails.
Verdict theorem2_not_coset_union(const GroupDescriptor& d);

// Divisible + torsion with every finite factor group cyclic: at most one
// bounded summand per prime (quasicyclic summands contribute nothing to a
// finite quotient).
Verdict corollary2_not_subgroup_union(const GroupDescriptor& d);

}  // namespace coverlab::descriptors
