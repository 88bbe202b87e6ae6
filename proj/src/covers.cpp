#include "covers.hpp"

#include <algorithm>
#include <set>

namespace coverlab::covers {

CoverPart CoverPart::from_subgroup(Subgroup s) {
  Bitmask m = s.mask();
  return CoverPart{std::move(s), std::nullopt, std::move(m)};
}

CoverPart CoverPart::from_coset(Coset c) {
  Bitmask m(c.subgroup().enumeration().size);
  for (std::uint32_t i : c.element_indices()) m.set(i);
  GroupElement rep = c.representative();
  return CoverPart{c.subgroup(), std::move(rep), std::move(m)};
}

CoverReport verify_proper_union(const CoverProblem& problem) {
  if (problem.parts.size() < 2)
    fail_input("TooFewParts", "a proper union needs at least 2 parts");
  Enumeration en = Enumeration::build(problem.group, problem.bound);

  for (const auto& part : problem.parts)
    if (part.mask.count() == en.size)
      fail_input("ImproperPart", "a cover part equals the whole group");

  Bitmask all(en.size);
  for (const auto& part : problem.parts) all |= part.mask;

  CoverReport report;
  report.covered = all.count() == en.size;
  if (!report.covered) {
    Bitmask missing = ~all;
    report.uncovered_witness = en.element_at(static_cast<std::uint32_t>(missing.find_first()));
    report.proper = false;
    return report;
  }

  report.proper = true;
  for (std::size_t k = 0; k < problem.parts.size(); ++k) {
    Bitmask others(en.size);
    for (std::size_t i = 0; i < problem.parts.size(); ++i)
      if (i != k) others |= problem.parts[i].mask;
    Bitmask exclusive = problem.parts[k].mask & ~others;
    auto first = exclusive.find_first();
    if (first == Bitmask::npos) {
      report.proper = false;
    } else {
      report.missing_after_removal.emplace(k, en.element_at(static_cast<std::uint32_t>(first)));
    }
  }
  return report;
}

namespace {

// Depth-limited cover search branching on the least uncovered element; any
// completion must include a part containing it.
bool cover_dfs(const std::vector<Bitmask>& parts, const Bitmask& full,
               Bitmask current, std::vector<std::size_t>& chosen, std::size_t depth_left,
               const std::vector<std::vector<std::size_t>>& parts_by_element) {
  if (current == full) return true;
  if (depth_left == 0) return false;
  Bitmask missing = full & ~current;
  const auto e = missing.find_first();
  for (std::size_t cand : parts_by_element[e]) {
    if (std::find(chosen.begin(), chosen.end(), cand) != chosen.end()) continue;
    chosen.push_back(cand);
    if (cover_dfs(parts, full, current | parts[cand], chosen, depth_left - 1,
                  parts_by_element))
      return true;
    chosen.pop_back();
  }
  return false;
}

MinimalCoverResult minimal_cover_over(const Enumeration& en,
                                      const std::vector<Subgroup>& candidates) {
  MinimalCoverResult result;

  Bitmask full(en.size);
  full.set();
  Bitmask reach(en.size);
  std::vector<Bitmask> masks;
  masks.reserve(candidates.size());
  for (const auto& s : candidates) {
    masks.push_back(s.mask());
    reach |= s.mask();
  }

  if (reach != full) {
    // Some element lies in no proper subgroup: it generates, so no family of
    // proper parts covers.
    Bitmask missing = full & ~reach;
    result.found = false;
    result.nocover_generator = en.element_at(static_cast<std::uint32_t>(missing.find_first()));
    return result;
  }

  std::vector<std::vector<std::size_t>> parts_by_element(en.size);
  for (std::size_t p = 0; p < masks.size(); ++p)
    for (std::size_t e = masks[p].find_first(); e != Bitmask::npos; e = masks[p].find_next(e))
      parts_by_element[e].push_back(p);

  for (std::size_t k = 2; k <= masks.size(); ++k) {
    std::vector<std::size_t> chosen;
    if (cover_dfs(masks, full, Bitmask(en.size), chosen, k, parts_by_element)) {
      result.found = true;
      result.k = chosen.size();
      std::sort(chosen.begin(), chosen.end());
      for (std::size_t idx : chosen) result.cover.push_back(candidates[idx]);
      return result;
    }
  }
  fail_internal("maximal subgroups cover the group yet no finite cover was found");
}

}  // namespace

MinimalCoverResult minimal_subgroup_cover(const FiniteAbelianGroup& g, std::uint64_t bound) {
  Enumeration en = Enumeration::build(g, bound);
  if (g.is_trivial()) {
    MinimalCoverResult r;
    r.found = false;
    r.nocover_generator = g.zero();  // no proper nonempty parts exist at all
    return r;
  }
  auto maximal = groups::maximal_subgroups(g, bound);
  return minimal_cover_over(en, maximal);
}

ConstructedCover construct_subgroup_cover(const FiniteAbelianGroup& g, std::uint64_t bound) {
  Enumeration en = Enumeration::build(g, bound);
  ConstructedCover out;

  // rank(G/pG) >= 2 iff p divides at least two invariant factors, i.e. the
  // second-largest one; noncyclic groups always admit such a prime.
  const auto& f = g.invariant_factors();
  if (f.size() <= 1) {
    out.found = false;
    if (g.is_trivial()) {
      out.nocover_generator = g.zero();
    } else {
      std::vector<Int> gen(f.size(), 0);
      gen[0] = 1;
      out.nocover_generator = GroupElement{std::move(gen)};
    }
    return out;
  }

  Int p = 2;
  {
    Int second = f[f.size() - 2];
    for (Int c = 2; c * c <= second; ++c)
      if (second % c == 0) {
        p = c;
        break;
      }
    if (second % p != 0) p = second;  // second-largest factor is prime
  }

  // First two coordinates divisible by p carry the rank-2 quotient.
  std::vector<std::size_t> axes;
  for (std::size_t i = 0; i < f.size() && axes.size() < 2; ++i)
    if (f[i] % p == 0) axes.push_back(i);

  const std::size_t r = f.size();
  auto basis_vector = [&](std::size_t axis, const Int& value) {
    std::vector<Int> c(r, 0);
    c[axis] = value;
    return g.reduce(std::move(c));
  };

  std::vector<GroupElement> common;
  for (std::size_t i = 0; i < r; ++i)
    if (i != axes[0] && i != axes[1]) common.push_back(basis_vector(i, 1));
  common.push_back(basis_vector(axes[0], p));
  common.push_back(basis_vector(axes[1], p));

  // Lines of the rank-2 quotient: <(1, t)> for t in [0, p) and <(0, 1)>.
  for (Int t = 0; t < p; ++t) {
    std::vector<GroupElement> gens = common;
    std::vector<Int> c(r, 0);
    c[axes[0]] = 1;
    c[axes[1]] = t;
    gens.push_back(g.reduce(std::move(c)));
    out.cover.push_back(Subgroup::from_generators(g, gens, bound));
  }
  {
    std::vector<GroupElement> gens = common;
    gens.push_back(basis_vector(axes[1], 1));
    out.cover.push_back(Subgroup::from_generators(g, gens, bound));
  }

  out.found = true;
  out.prime = p;
  return out;
}

std::vector<std::vector<std::uint32_t>> enumerate_subsemigroups(const FiniteAbelianGroup& g,
                                                                std::uint64_t bound) {
  Enumeration en = Enumeration::build(g, bound);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> work;
  for (std::uint32_t x = 0; x < en.size; ++x) {
    auto closed = groups::semigroup_closure(en, {x});
    if (seen.insert(closed).second) work.push_back(closed);
  }
  while (!work.empty()) {
    auto s = std::move(work.back());
    work.pop_back();
    Bitmask in(en.size);
    for (std::uint32_t x : s) in.set(x);
    for (std::uint32_t x = 0; x < en.size; ++x) {
      if (in.test(x)) continue;
      auto seed = s;
      seed.push_back(x);
      auto closed = groups::semigroup_closure(en, seed);
      if (seen.insert(closed).second) work.push_back(closed);
    }
  }
  return {seen.begin(), seen.end()};
}

SubsemigroupCoverResult minimal_subsemigroup_cover(const FiniteAbelianGroup& g,
                                                   std::uint64_t bound) {
  Enumeration en = Enumeration::build(g, bound);
  SubsemigroupCoverResult out;

  auto closed_sets = enumerate_subsemigroups(g, bound);
  auto subgroup_list = groups::subgroups(g, bound);
  out.subsemigroup_count = closed_sets.size();
  out.subgroup_count = subgroup_list.size();

  std::set<std::vector<std::uint32_t>> subgroup_sets;
  for (const auto& s : subgroup_list)
    subgroup_sets.insert(s.element_indices());
  for (const auto& c : closed_sets)
    if (!subgroup_sets.count(c))
      fail_internal("subsemigroup closure produced a non-subgroup in a finite group");
  if (closed_sets.size() != subgroup_sets.size())
    fail_internal("subsemigroup/subgroup counts disagree");

  if (g.is_trivial()) {
    out.result.found = false;
    out.result.nocover_generator = g.zero();
    return out;
  }

  // The part pool coincides with the subgroups, so the minimal search is the
  // subgroup search over maximal members.
  out.result = minimal_cover_over(en, groups::maximal_subgroups(g, bound));
  return out;
}

}  // namespace coverlab::covers
