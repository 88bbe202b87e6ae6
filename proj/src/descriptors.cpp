#include "descriptors.hpp"

#include <map>
#include <set>

namespace coverlab::descriptors {

CardinalTag CardinalTag::finite(Int n) {
  if (n < 0) fail_input("BadCardinal", "finite cardinal must be >= 0");
  CardinalTag t;
  t.kind = Kind::finite;
  t.count = std::move(n);
  return t;
}

CardinalTag CardinalTag::countable() {
  CardinalTag t;
  t.kind = Kind::countably_infinite;
  return t;
}

CardinalTag CardinalTag::symbolic(std::string name) {
  CardinalTag t;
  t.kind = Kind::symbolic;
  t.name = std::move(name);
  return t;
}

void GroupDescriptor::validate() const {
  for (const Int& p : prufer)
    if (!is_probable_prime(p))
      fail_input("BadDescriptor", "quasicyclic summand base " + p.str() + " is not prime");
  std::set<std::pair<Int, unsigned>> seen;
  for (const auto& e : bounded_torsion) {
    if (!is_probable_prime(e.q))
      fail_input("BadDescriptor", "torsion base " + e.q.str() + " is not prime");
    if (!e.unbounded_exponent && e.k < 1)
      fail_input("BadDescriptor", "torsion exponent must be >= 1");
    if (e.mult.is_zero())
      fail_input("BadDescriptor", "torsion multiplicity must be positive");
    if (!e.unbounded_exponent && !seen.insert({e.q, e.k}).second)
      fail_input("BadDescriptor", "duplicate torsion pair (q, k)");
  }
}

bool GroupDescriptor::torsion_absent() const { return bounded_torsion.empty(); }

bool GroupDescriptor::is_finite_group() const {
  if (!rational_rank.is_zero() || !prufer.empty()) return false;
  for (const auto& e : bounded_torsion)
    if (e.unbounded_exponent || !e.mult.is_finite()) return false;
  return true;
}

std::vector<Int> GroupDescriptor::finite_moduli() const {
  if (!is_finite_group()) fail_input("NotFinite", "descriptor is not a finite group");
  std::vector<Int> moduli;
  for (const auto& e : bounded_torsion) {
    Int order = 1;
    for (unsigned i = 0; i < e.k; ++i) order *= e.q;
    for (Int c = 0; c < e.mult.count; ++c) moduli.push_back(order);
  }
  return moduli;
}

Verdict is_artinian_additive(const GroupDescriptor& d, std::optional<Int> m_bound) {
  d.validate();
  for (const auto& e : d.bounded_torsion)
    if (e.unbounded_exponent)
      return {false, "unbounded-exponent-family",
              "torsion family at prime " + e.q.str() + " has no common exponent bound"};
  if (m_bound) {
    for (const auto& e : d.bounded_torsion) {
      Int order = 1;
      for (unsigned i = 0; i < e.k; ++i) order *= e.q;
      if (*m_bound % order != 0)
        return {false, "exceeds-m-bound",
                order.str() + " does not divide m = " + m_bound->str()};
    }
    return {true, "all-divide-m-bound", "every torsion order divides m = " + m_bound->str()};
  }
  return {true, "bounded-exponents",
          "finitely many torsion orders admit a common bound (their product)"};
}

namespace {

void require_artinian(const GroupDescriptor& d) {
  Verdict shape = is_artinian_additive(d);
  if (!shape.value)
    fail_input("PreconditionFailed", "descriptor is not of Artinian additive shape: " +
                                         shape.detail);
}

// The grammar keeps descriptors in split form, so the divisible + torsion
// precondition only rules out malformed entries.
void require_split_shape(const GroupDescriptor& d) {
  d.validate();
}

}  // namespace

Verdict theorem1_not_proper_union(const GroupDescriptor& d) {
  require_artinian(d);
  std::map<Int, Int> per_prime;  // finite summand count per prime
  for (const auto& e : d.bounded_torsion) {
    if (!e.mult.is_finite())
      return {false, "infinite-torsion-multiplicity",
              "prime " + e.q.str() + " contributes infinitely many bounded summands"};
    per_prime[e.q] += e.mult.count;
  }
  for (const auto& [q, count] : per_prime)
    if (count > 1)
      return {false, "repeated-prime-summand",
              "prime " + q.str() + " contributes " + count.str() +
                  " bounded summands; the bounded part is not cyclic"};
  return {true, "bounded-part-finite-cyclic",
          "bounded torsion has at most one summand per prime, so it is finite cyclic"};
}

Verdict corollary1_not_coset_union(const GroupDescriptor& d) {
  require_artinian(d);
  if (!d.torsion_absent()) {
    const auto& e = d.bounded_torsion.front();
    return {false, "nontrivial-bounded-torsion",
            "bounded summand of order " + e.q.str() + "^" + std::to_string(e.k) +
                " blocks divisibility"};
  }
  return {true, "divisible", "rational and quasicyclic summands only"};
}

Verdict theorem2_not_coset_union(const GroupDescriptor& d) {
  require_split_shape(d);
  for (const auto& e : d.bounded_torsion)
    return {false, "finite-index-subgroup",
            "bounded summand at prime " + e.q.str() +
                " yields a proper subgroup of index " + e.q.str()};
  return {true, "no-finite-index-subgroup",
          "torsion part is a sum of quasicyclic groups, which have no proper "
          "finite-index subgroups"};
}

Verdict corollary2_not_subgroup_union(const GroupDescriptor& d) {
  require_split_shape(d);
  std::map<Int, Int> per_prime;
  for (const auto& e : d.bounded_torsion) {
    if (!e.mult.is_finite())
      return {false, "noncyclic-finite-quotient",
              "prime " + e.q.str() + " contributes more than one bounded summand, giving a "
              "noncyclic finite factor group"};
    per_prime[e.q] += e.mult.count;
  }
  for (const auto& [q, count] : per_prime)
    if (count > 1)
      return {false, "noncyclic-finite-quotient",
              "prime " + q.str() + " contributes " + count.str() +
                  " bounded summands, giving a noncyclic finite factor group"};
  return {true, "all-finite-quotients-cyclic",
          "at most one bounded summand per prime: every finite factor group is cyclic"};
}

}  // namespace coverlab::descriptors
