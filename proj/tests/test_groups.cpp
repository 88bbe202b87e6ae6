#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "groups.hpp"

using namespace coverlab;
using namespace coverlab::groups;

namespace {

FiniteAbelianGroup cyclic(std::int64_t n) { return FiniteAbelianGroup({Int(n)}); }

FiniteAbelianGroup product(std::initializer_list<std::int64_t> ds) {
  std::vector<Int> v;
  for (auto d : ds) v.emplace_back(d);
  return FiniteAbelianGroup(std::move(v));
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

// Oracle: gcd of all k x k minors of M (0 when all vanish).
Int minor_gcd(const IntMat& m, std::size_t k) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  if (k > rows || k > cols) return 0;
  Int g = 0;
  auto rcomb = first_combination(k);
  do {
    auto ccomb = first_combination(k);
    do {
      IntMat sub(k, std::vector<Int>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[rcomb[a]][ccomb[b]];
      g = gcd(g, mat_det(sub));
    } while (next_combination(ccomb, cols));
  } while (next_combination(rcomb, rows));
  return g < 0 ? -g : g;
}

void check_snf_invariants(const IntMat& m) {
  auto [u, d, v] = smith_normal_form(m);
  CHECK(mat_mul(mat_mul(u, m), v) == d);
  Int du = mat_det(u), dv = mat_det(v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  // divisibility chain and minor-gcd characterization
  Int prefix = 1;
  const std::size_t steps = std::min(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < steps; ++i) {
    CHECK(d[i][i] >= 0);
    if (i + 1 < steps && d[i + 1][i + 1] != 0) CHECK(d[i + 1][i + 1] % d[i][i] == 0);
    prefix *= d[i][i];
    CHECK(prefix == minor_gcd(m, i + 1));
    if (prefix == 0) break;
  }
}

// Oracle: every subgroup arises as the closure of some subset. Only usable
// for small groups.
std::set<std::vector<std::uint32_t>> subgroups_by_subset_closure(const FiniteAbelianGroup& g) {
  Enumeration en = Enumeration::build(g);
  std::set<std::vector<std::uint32_t>> out;
  const std::uint64_t n = en.size;
  REQUIRE(n <= 16);
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<std::uint32_t> seed;
    for (std::uint64_t b = 0; b < n; ++b)
      if (mask & (1ull << b)) seed.push_back(static_cast<std::uint32_t>(b));
    out.insert(subgroup_closure(en, seed));
  }
  return out;
}

}  // namespace

TEST_CASE("invariant factor validation") {
  CHECK_NOTHROW(product({2, 4}));
  CHECK_NOTHROW(product({2, 2, 2}));
  CHECK_THROWS_AS(product({4, 2}), Error);   // not a chain
  CHECK_THROWS_AS(product({1, 2}), Error);   // factor < 2
  CHECK_THROWS_AS(product({2, 3}), Error);   // 2 does not divide 3
  CHECK(product({}).order() == 1);
  CHECK(product({2, 6}).order() == 12);
}

TEST_CASE("from_moduli canonicalizes") {
  auto g = FiniteAbelianGroup::from_moduli({Int(2), Int(3)});
  CHECK(g.invariant_factors() == std::vector<Int>{Int(6)});
  auto h = FiniteAbelianGroup::from_moduli({Int(6), Int(10)});
  CHECK(h.invariant_factors() == std::vector<Int>{Int(2), Int(30)});
  auto t = FiniteAbelianGroup::from_moduli({Int(1), Int(1)});
  CHECK(t.is_trivial());
}

TEST_CASE("smith normal form: identity") {
  IntMat m = mat_identity(2);
  auto [u, d, v] = smith_normal_form(m);
  CHECK(d == mat_identity(2));
  check_snf_invariants(m);
}

TEST_CASE("smith normal form: already diagonal chain") {
  IntMat m = {{Int(2), Int(0)}, {Int(0), Int(4)}};
  auto [u, d, v] = smith_normal_form(m);
  CHECK(d == m);
  check_snf_invariants(m);
}

TEST_CASE("smith normal form: diag(2,3) -> diag(1,6)") {
  IntMat m = {{Int(2), Int(0)}, {Int(0), Int(3)}};
  // oracle: gcd of entries is 1, gcd of 2x2 minors is 6
  CHECK(minor_gcd(m, 1) == 1);
  CHECK(minor_gcd(m, 2) == 6);
  auto [u, d, v] = smith_normal_form(m);
  CHECK(d[0][0] == 1);
  CHECK(d[1][1] == 6);
  check_snf_invariants(m);
}

TEST_CASE("smith normal form: seeded random matrices") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMat m(rows, std::vector<Int>(cols));
    for (auto& r : m)
      for (auto& x : r) x = Int(static_cast<std::int64_t>(rng() % 19) - 9);
    check_snf_invariants(m);
  }
}

TEST_CASE("subgroup enumeration against subset-closure oracle") {
  struct Case {
    FiniteAbelianGroup g;
    std::size_t expected;
  };
  const Case cases[] = {
      {cyclic(5), 2},          // prime: trivial and whole
      {cyclic(4), 3},
      {product({2, 2}), 5},
      {product({2, 4}), 8},
      {cyclic(12), 6},
  };
  for (const auto& c : cases) {
    auto oracle = subgroups_by_subset_closure(c.g);
    auto got = subgroups(c.g);
    CHECK(got.size() == oracle.size());
    CHECK(got.size() == c.expected);
    std::set<std::vector<std::uint32_t>> got_sets;
    for (const auto& s : got) got_sets.insert(s.element_indices());
    CHECK(got_sets == oracle);
    // canonical order: by order then element list
    for (std::size_t i = 1; i < got.size(); ++i) {
      CHECK(got[i - 1].order() <= got[i].order());
    }
  }
}

TEST_CASE("subgroup Lagrange and generator properties") {
  for (const auto& g : {product({2, 2}), product({2, 4}), cyclic(12), product({3, 3})}) {
    for (const auto& h : subgroups(g)) {
      CHECK(to_int64(g.order()) % static_cast<std::int64_t>(h.order()) == 0);
      // generators regenerate the element set
      auto re = Subgroup::from_generators(g, h.generators());
      CHECK(re.element_indices() == h.element_indices());
      // minimal generator count: cannot drop any generator
      if (!h.generators().empty()) {
        for (std::size_t skip = 0; skip < h.generators().size(); ++skip) {
          std::vector<GroupElement> fewer;
          for (std::size_t i = 0; i < h.generators().size(); ++i)
            if (i != skip) fewer.push_back(h.generators()[i]);
          auto smaller = Subgroup::from_generators(g, fewer);
          CHECK(smaller.order() < h.order());
        }
      }
    }
  }
}

TEST_CASE("subgroups bound guard") {
  CHECK_THROWS_AS(subgroups(cyclic(64), 32), Error);
  try {
    subgroups(cyclic(64), 32);
  } catch (const Error& e) {
    CHECK(e.code() == "BoundExceeded");
    CHECK(e.error_class() == ErrorClass::bound_exceeded);
  }
}

TEST_CASE("coset canonical representative") {
  auto g = product({2, 4});
  Enumeration en = Enumeration::build(g);
  for (const auto& h : subgroups(g)) {
    for (std::uint32_t x = 0; x < en.size; ++x) {
      Coset c(h, en.element_at(x));
      CHECK(c.contains(c.representative()));
      auto members = c.element_indices();
      CHECK(en.index_of(c.representative()) == members.front());  // lex least
      // same coset from any member gives the same data
      Coset c2(h, en.element_at(members.back()));
      CHECK(c == c2);
    }
  }
}

TEST_CASE("coset intersection: examples") {
  auto c6 = cyclic(6);
  auto subs = subgroups(c6);
  auto find_sub = [&](std::uint64_t order) {
    for (const auto& s : subs)
      if (s.order() == order) return s;
    REQUIRE(false);
    return subs[0];
  };

  // c ∩ c = c
  Coset c(find_sub(3), c6.reduce({Int(1)}));
  auto self = coset_intersect(c, c);
  REQUIRE(self.has_value());
  CHECK(*self == c);

  // disjoint cosets of the same subgroup in C_4
  auto c4 = cyclic(4);
  auto c4subs = subgroups(c4);
  const Subgroup* even = nullptr;
  for (const auto& s : c4subs)
    if (s.order() == 2) even = &s;
  REQUIRE(even != nullptr);
  Coset e0(*even, c4.reduce({Int(0)}));
  Coset e1(*even, c4.reduce({Int(1)}));
  CHECK_FALSE(coset_intersect(e0, e1).has_value());

  // C_6: (1 + <2>) ∩ (1 + <3>) = {1}
  Coset a(find_sub(3), c6.reduce({Int(1)}));  // <2> has order 3
  Coset b(find_sub(2), c6.reduce({Int(1)}));  // <3> has order 2
  auto meet = coset_intersect(a, b);
  REQUIRE(meet.has_value());
  CHECK(meet->subgroup().order() == 1);
  CHECK(meet->representative() == c6.reduce({Int(1)}));
}

TEST_CASE("coset intersection equals element-wise intersection") {
  for (const auto& g : {product({2, 4}), cyclic(10), product({2, 2, 2})}) {
    Enumeration en = Enumeration::build(g);
    std::vector<Coset> cosets;
    for (const auto& h : subgroups(g)) {
      std::set<std::vector<std::uint32_t>> seen;
      for (std::uint32_t x = 0; x < en.size; ++x) {
        Coset c(h, en.element_at(x));
        if (seen.insert(c.element_indices()).second) cosets.push_back(c);
      }
    }
    for (const auto& c1 : cosets)
      for (const auto& c2 : cosets) {
        std::vector<std::uint32_t> expect;
        auto m1 = c1.element_indices(), m2 = c2.element_indices();
        std::set_intersection(m1.begin(), m1.end(), m2.begin(), m2.end(),
                              std::back_inserter(expect));
        auto got = coset_intersect(c1, c2);
        if (expect.empty()) {
          CHECK_FALSE(got.has_value());
        } else {
          REQUIRE(got.has_value());
          CHECK(got->element_indices() == expect);
        }
      }
  }
}

TEST_CASE("coset intersection parent mismatch") {
  auto a = cyclic(4), b = cyclic(6);
  Coset ca(subgroups(a)[0], a.zero());
  Coset cb(subgroups(b)[0], b.zero());
  try {
    coset_intersect(ca, cb);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "ParentMismatch");
  }
}

TEST_CASE("quotient rank") {
  // oracle: |G| / |pG| = p^rank
  auto oracle_rank = [](const FiniteAbelianGroup& g, std::int64_t p) {
    Enumeration en = Enumeration::build(g);
    std::set<std::vector<Int>> image;
    for (std::uint32_t x = 0; x < en.size; ++x)
      image.insert(g.scale(Int(p), en.element_at(x)).coords);
    std::uint64_t quotient = en.size / image.size();
    unsigned rank = 0;
    while (quotient > 1) {
      CHECK(quotient % p == 0);
      quotient /= p;
      ++rank;
    }
    return rank;
  };

  CHECK(quotient_rank(product({2, 2}), 2) == 2);
  CHECK(oracle_rank(product({2, 2}), 2) == 2);
  CHECK(quotient_rank(cyclic(6), 2) == 1);
  CHECK(oracle_rank(cyclic(6), 2) == 1);
  CHECK(quotient_rank(cyclic(9), 2) == 0);
  CHECK(oracle_rank(cyclic(9), 2) == 0);
  CHECK(quotient_rank(product({2, 4}), 2) == 2);
  CHECK(oracle_rank(product({2, 4}), 2) == 2);

  CHECK_THROWS_AS(quotient_rank(cyclic(6), 4), Error);
  try {
    quotient_rank(cyclic(6), 1);
  } catch (const Error& e) {
    CHECK(e.code() == "NotPrime");
  }
}

TEST_CASE("maximal subgroups match filtering the full lattice") {
  for (const auto& g : {product({2, 2}), product({2, 4}), cyclic(12), product({3, 3}),
                        product({2, 2, 2})}) {
    auto all = subgroups(g);
    std::vector<Subgroup> expected;
    for (const auto& h : all) {
      if (h.is_whole_group()) continue;
      bool maximal = true;
      for (const auto& k : all) {
        if (k.is_whole_group() || k.order() <= h.order()) continue;
        if (h.mask().is_subset_of(k.mask())) maximal = false;
      }
      if (maximal) expected.push_back(h);
    }
    auto got = maximal_subgroups(g);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      CHECK(got[i].element_indices() == expected[i].element_indices());
  }
}
