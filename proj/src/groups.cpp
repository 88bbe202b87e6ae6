#include "groups.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coverlab::groups {

namespace {

std::vector<Int> diagonal_of(const IntMat& d) {
  std::vector<Int> out;
  for (std::size_t i = 0; i < d.size() && i < (d.empty() ? 0 : d[0].size()); ++i)
    out.push_back(d[i][i]);
  return out;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> invariant_factors)
    : factors_(std::move(invariant_factors)), order_(1) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      fail_input("BadInvariantFactors", "invariant factor must be >= 2, got " + factors_[i].str());
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
      fail_input("BadInvariantFactors",
                 factors_[i].str() + " does not divide " + factors_[i + 1].str());
    order_ *= factors_[i];
  }
}

FiniteAbelianGroup FiniteAbelianGroup::from_moduli(const std::vector<Int>& moduli) {
  IntMat rel(moduli.size(), std::vector<Int>(moduli.size(), 0));
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 1) fail_input("BadModulus", "modulus must be >= 1");
    rel[i][i] = moduli[i];
  }
  SmithResult s = smith_normal_form(rel);
  std::vector<Int> factors;
  for (const Int& d : diagonal_of(s.d))
    if (d > 1) factors.push_back(d);
  return FiniteAbelianGroup(std::move(factors));
}

GroupElement FiniteAbelianGroup::zero() const {
  return GroupElement{std::vector<Int>(factors_.size(), 0)};
}

GroupElement FiniteAbelianGroup::reduce(std::vector<Int> coords) const {
  if (coords.size() != factors_.size())
    fail_input("BadElement", "coordinate count does not match group rank");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = mod_floor(coords[i], factors_[i]);
  return GroupElement{std::move(coords)};
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<Int> c(factors_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coords[i] + b.coords[i];
    if (c[i] >= factors_[i]) c[i] -= factors_[i];
  }
  return GroupElement{std::move(c)};
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  check_element(a);
  std::vector<Int> c(factors_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] == 0 ? Int(0) : factors_[i] - a.coords[i];
  return GroupElement{std::move(c)};
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

GroupElement FiniteAbelianGroup::scale(const Int& n, const GroupElement& a) const {
  check_element(a);
  std::vector<Int> c(factors_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(n * a.coords[i], factors_[i]);
  return GroupElement{std::move(c)};
}

void FiniteAbelianGroup::check_element(const GroupElement& e) const {
  if (e.coords.size() != factors_.size())
    fail_input("BadElement", "coordinate count does not match group rank");
  for (std::size_t i = 0; i < e.coords.size(); ++i)
    if (e.coords[i] < 0 || e.coords[i] >= factors_[i])
      fail_input("BadElement", "coordinate not reduced modulo its factor");
}

Enumeration Enumeration::build(const FiniteAbelianGroup& g, std::uint64_t bound) {
  if (g.order() > bound)
    fail_bound("group order " + g.order().str() + " exceeds enumeration bound " +
               std::to_string(bound));
  Enumeration en;
  const auto& f = g.invariant_factors();
  en.moduli.resize(f.size());
  en.strides.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) en.moduli[i] = to_int64(f[i]);
  std::uint64_t stride = 1;
  for (std::size_t i = f.size(); i-- > 0;) {
    en.strides[i] = stride;
    stride *= static_cast<std::uint64_t>(en.moduli[i]);
  }
  en.size = stride;
  return en;
}

std::uint32_t Enumeration::add(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const auto m = static_cast<std::uint64_t>(moduli[i]);
    std::uint64_t ca = (a / strides[i]) % m;
    std::uint64_t cb = (b / strides[i]) % m;
    std::uint64_t c = ca + cb;
    if (c >= m) c -= m;
    out += c * strides[i];
  }
  return static_cast<std::uint32_t>(out);
}

std::uint32_t Enumeration::neg(std::uint32_t a) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const auto m = static_cast<std::uint64_t>(moduli[i]);
    std::uint64_t ca = (a / strides[i]) % m;
    out += (ca == 0 ? 0 : m - ca) * strides[i];
  }
  return static_cast<std::uint32_t>(out);
}

std::uint32_t Enumeration::index_of(const GroupElement& e) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i)
    out += static_cast<std::uint64_t>(to_int64(e.coords[i])) * strides[i];
  return static_cast<std::uint32_t>(out);
}

GroupElement Enumeration::element_at(std::uint32_t idx) const {
  std::vector<Int> coords(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i)
    coords[i] = Int((idx / strides[i]) % static_cast<std::uint64_t>(moduli[i]));
  return GroupElement{std::move(coords)};
}

std::vector<std::uint32_t> subgroup_closure(const Enumeration& en,
                                            const std::vector<std::uint32_t>& seed) {
  // Closure under addition alone: powers of each member cycle through the
  // identity and inverses, so this is the generated subgroup.
  Bitmask in(en.size);
  std::vector<std::uint32_t> members;
  auto push = [&](std::uint32_t x) {
    if (!in.test(x)) {
      in.set(x);
      members.push_back(x);
    }
  };
  push(0);
  std::vector<std::uint32_t> work;
  for (std::uint32_t s : seed)
    if (!in.test(s)) {
      push(s);
      work.push_back(s);
    }
  while (!work.empty()) {
    std::uint32_t y = work.back();
    work.pop_back();
    const std::size_t snapshot = members.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      std::uint32_t s = en.add(y, members[i]);
      if (!in.test(s)) {
        push(s);
        work.push_back(s);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::uint32_t> semigroup_closure(const Enumeration& en,
                                             const std::vector<std::uint32_t>& seed) {
  Bitmask in(en.size);
  std::vector<std::uint32_t> members;
  std::vector<std::uint32_t> work;
  for (std::uint32_t s : seed)
    if (!in.test(s)) {
      in.set(s);
      members.push_back(s);
      work.push_back(s);
    }
  while (!work.empty()) {
    std::uint32_t y = work.back();
    work.pop_back();
    const std::size_t snapshot = members.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      std::uint32_t s = en.add(y, members[i]);
      if (!in.test(s)) {
        in.set(s);
        members.push_back(s);
        work.push_back(s);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subgroup::Subgroup(FiniteAbelianGroup g, Enumeration en, std::vector<std::uint32_t> idx)
    : parent_(std::move(g)), en_(std::move(en)), indices_(std::move(idx)), mask_(en_.size) {
  for (std::uint32_t i : indices_) mask_.set(i);
  // Greedy minimal generating list: extend by the element whose cyclic
  // extension grows the closure most (maximal order in the quotient), ties
  // broken by least index. This realizes the minimal generator count.
  Bitmask have(en_.size);
  have.set(0);
  std::size_t have_count = 1;
  std::vector<std::uint32_t> current{0};
  while (have_count < indices_.size()) {
    std::uint64_t best_size = 0;
    std::uint32_t best = 0;
    std::vector<std::uint32_t> best_closure;
    for (std::uint32_t cand : indices_) {
      if (have.test(cand)) continue;
      std::vector<std::uint32_t> seed = current;
      seed.push_back(cand);
      auto closed = subgroup_closure(en_, seed);
      if (closed.size() > best_size) {
        best_size = closed.size();
        best = cand;
        best_closure = std::move(closed);
      }
    }
    generators_.push_back(en_.element_at(best));
    current = best_closure;
    have.reset();
    for (std::uint32_t i : current) have.set(i);
    have_count = current.size();
  }
}

Subgroup Subgroup::from_generators(const FiniteAbelianGroup& g,
                                   const std::vector<GroupElement>& gens,
                                   std::uint64_t bound) {
  Enumeration en = Enumeration::build(g, bound);
  std::vector<std::uint32_t> seed;
  for (const auto& e : gens) {
    g.check_element(e);
    seed.push_back(en.index_of(e));
  }
  auto closed = subgroup_closure(en, seed);
  return Subgroup(g, std::move(en), std::move(closed));
}

Subgroup Subgroup::from_indices(const FiniteAbelianGroup& g, const Enumeration& en,
                                std::vector<std::uint32_t> sorted_indices) {
  return Subgroup(g, en, std::move(sorted_indices));
}

bool Subgroup::contains(const GroupElement& e) const {
  parent_.check_element(e);
  return mask_.test(en_.index_of(e));
}

Coset::Coset(Subgroup subgroup, const GroupElement& any_member)
    : subgroup_(std::move(subgroup)) {
  subgroup_.parent().check_element(any_member);
  const Enumeration& en = subgroup_.enumeration();
  std::uint32_t anchor = en.index_of(any_member);
  // Index order is lexicographic order on coordinates: the least index in
  // the coset is the canonical representative.
  std::uint32_t best = UINT32_MAX;
  for (std::uint32_t h : subgroup_.element_indices()) best = std::min(best, en.add(anchor, h));
  rep_index_ = best;
  rep_ = en.element_at(best);
}

bool Coset::contains_index(std::uint32_t idx) const {
  const Enumeration& en = subgroup_.enumeration();
  return subgroup_.contains_index(en.add(idx, en.neg(rep_index_)));
}

bool Coset::contains(const GroupElement& e) const {
  subgroup_.parent().check_element(e);
  return contains_index(subgroup_.enumeration().index_of(e));
}

std::vector<std::uint32_t> Coset::element_indices() const {
  const Enumeration& en = subgroup_.enumeration();
  std::vector<std::uint32_t> out;
  out.reserve(subgroup_.order());
  for (std::uint32_t h : subgroup_.element_indices()) out.push_back(en.add(rep_index_, h));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Integer matrices and Smith normal form.

IntMat mat_identity(std::size_t n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  IntMat c(n, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

Int mat_det(const IntMat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Int det = 0;
  // Laplace expansion; matrices here are tiny.
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    IntMat minor(n - 1, std::vector<Int>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = a[r][c];
      }
    }
    Int term = a[0][j] * mat_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

namespace {

struct SnfWork {
  IntMat a, u, v;
  std::size_t rows, cols;

  void row_swap(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
  }
  void row_negate(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }
  // rows (i, j) <- (x*ri + y*rj, -b/g*ri + a/g*rj); determinant of the
  // 2x2 transform is +1 when g = x*a + y*b.
  void row_gcd_step(std::size_t i, std::size_t j, std::size_t col) {
    const Int p = a[i][col], q = a[j][col];
    Int x, y;
    Int g = ext_gcd(p, q, x, y);
    const Int pr = p / g, qr = q / g;
    for (std::size_t c = 0; c < cols; ++c) {
      Int top = x * a[i][c] + y * a[j][c];
      Int bot = -qr * a[i][c] + pr * a[j][c];
      a[i][c] = top;
      a[j][c] = bot;
    }
    for (std::size_t c = 0; c < rows; ++c) {
      Int top = x * u[i][c] + y * u[j][c];
      Int bot = -qr * u[i][c] + pr * u[j][c];
      u[i][c] = top;
      u[j][c] = bot;
    }
  }
  void col_gcd_step(std::size_t i, std::size_t j, std::size_t row) {
    const Int p = a[row][i], q = a[row][j];
    Int x, y;
    Int g = ext_gcd(p, q, x, y);
    const Int pr = p / g, qr = q / g;
    for (std::size_t r = 0; r < rows; ++r) {
      Int left = x * a[r][i] + y * a[r][j];
      Int right = -qr * a[r][i] + pr * a[r][j];
      a[r][i] = left;
      a[r][j] = right;
    }
    for (std::size_t r = 0; r < v.size(); ++r) {
      Int left = x * v[r][i] + y * v[r][j];
      Int right = -qr * v[r][i] + pr * v[r][j];
      v[r][i] = left;
      v[r][j] = right;
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& r : m)
    if (r.size() != cols) fail_input("BadMatrix", "ragged matrix");

  SnfWork w{m, mat_identity(rows), mat_identity(cols), rows, cols};

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    // Locate a pivot of least absolute value in the trailing block.
    std::size_t pi = t, pj = t;
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (w.a[i][j] == 0) continue;
        Int mag = abs(w.a[i][j]);
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    if (pi != t) w.row_swap(t, pi);
    if (pj != t) w.col_swap(t, pj);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i)
        if (w.a[i][t] != 0) w.row_gcd_step(t, i, t);
      bool col_dirty = false;
      for (std::size_t j = t + 1; j < cols; ++j)
        if (w.a[t][j] != 0) {
          w.col_gcd_step(t, j, t);
          col_dirty = true;
        }
      if (!col_dirty) {
        bool row_dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (w.a[i][t] != 0) row_dirty = true;
        if (!row_dirty) break;
      }
    }
    if (w.a[t][t] < 0) w.row_negate(t);

    // Divisibility repair: fold any non-divisible trailing entry into the
    // pivot row and re-run elimination at this step.
    bool repaired = false;
    for (std::size_t i = t + 1; i < rows && !repaired; ++i)
      for (std::size_t j = t + 1; j < cols && !repaired; ++j)
        if (w.a[i][j] % w.a[t][t] != 0) {
          for (std::size_t c = 0; c < cols; ++c) w.a[t][c] += w.a[i][c];
          for (std::size_t c = 0; c < rows; ++c) w.u[t][c] += w.u[i][c];
          repaired = true;
        }
    if (repaired) --t;
  }

  IntMat d(rows, std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < steps; ++i) d[i][i] = w.a[i][i];
  return SmithResult{std::move(w.u), std::move(d), std::move(w.v)};
}

// ---------------------------------------------------------------------------
// Subgroup enumeration and coset algebra.

std::vector<Subgroup> subgroups(const FiniteAbelianGroup& g, std::uint64_t bound) {
  Enumeration en = Enumeration::build(g, bound);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> work;

  std::vector<std::uint32_t> trivial{0};
  seen.insert(trivial);
  work.push_back(trivial);

  while (!work.empty()) {
    auto h = std::move(work.back());
    work.pop_back();
    Bitmask in(en.size);
    for (std::uint32_t x : h) in.set(x);
    for (std::uint32_t x = 0; x < en.size; ++x) {
      if (in.test(x)) continue;
      std::vector<std::uint32_t> seed = h;
      seed.push_back(x);
      auto closed = subgroup_closure(en, seed);
      if (seen.insert(closed).second) work.push_back(closed);
    }
  }

  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& idx : seen) out.push_back(Subgroup::from_indices(g, en, idx));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.element_indices() < b.element_indices();
  });
  return out;
}

std::vector<Subgroup> maximal_subgroups(const FiniteAbelianGroup& g, std::uint64_t bound) {
  Enumeration en = Enumeration::build(g, bound);
  if (g.is_trivial()) return {};

  // Prime support of the order, from the invariant factors.
  std::set<std::int64_t> primes;
  for (std::int64_t d : en.moduli) {
    std::int64_t n = d;
    for (std::int64_t p = 2; p * p <= n; ++p)
      while (n % p == 0) {
        primes.insert(p);
        n /= p;
      }
    if (n > 1) primes.insert(n);
  }

  std::vector<Subgroup> out;
  for (std::int64_t p : primes) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < en.moduli.size(); ++i)
      if (en.moduli[i] % p == 0) support.push_back(i);
    const std::size_t r = support.size();

    // Functionals into Z/p up to scalar: first nonzero coefficient fixed to 1.
    std::vector<std::int64_t> coef(r, 0);
    for (std::size_t lead = 0; lead < r; ++lead) {
      std::fill(coef.begin(), coef.end(), 0);
      coef[lead] = 1;
      // Vary coefficients after the leading 1 over all of [0, p)^(r-lead-1).
      std::vector<std::int64_t> tail(r - lead - 1, 0);
      for (;;) {
        for (std::size_t i = 0; i < tail.size(); ++i) coef[lead + 1 + i] = tail[i];
        std::vector<std::uint32_t> kernel;
        for (std::uint32_t x = 0; x < en.size; ++x) {
          std::int64_t acc = 0;
          for (std::size_t i = lead; i < r; ++i) {
            const std::size_t axis = support[i];
            const auto c =
                static_cast<std::int64_t>((x / en.strides[axis]) %
                                          static_cast<std::uint64_t>(en.moduli[axis]));
            acc = (acc + coef[i] * (c % p)) % p;
          }
          if (acc == 0) kernel.push_back(x);
        }
        out.push_back(Subgroup::from_indices(g, en, std::move(kernel)));
        std::size_t k = tail.size();
        while (k > 0 && tail[k - 1] == p - 1) tail[--k] = 0;
        if (k == 0) break;
        ++tail[k - 1];
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.element_indices() < b.element_indices();
  });
  return out;
}

std::optional<Coset> coset_intersect(const Coset& c1, const Coset& c2) {
  if (!(c1.subgroup().parent() == c2.subgroup().parent()))
    fail_input("ParentMismatch", "cosets live in different groups");
  const Enumeration& en = c1.subgroup().enumeration();

  std::vector<std::uint32_t> common;
  common.reserve(std::min(c1.subgroup().order(), c2.subgroup().order()));
  Bitmask both = c1.subgroup().mask() & c2.subgroup().mask();
  for (std::size_t i = both.find_first(); i != Bitmask::npos; i = both.find_next(i))
    common.push_back(static_cast<std::uint32_t>(i));

  // Any shared member anchors the intersection coset of H1 ∩ H2.
  std::optional<std::uint32_t> anchor;
  for (std::uint32_t x : c1.element_indices())
    if (c2.contains_index(x)) {
      anchor = x;
      break;
    }
  if (!anchor) return std::nullopt;

  Subgroup meet = Subgroup::from_indices(c1.subgroup().parent(), en, std::move(common));
  return Coset(std::move(meet), en.element_at(*anchor));
}

unsigned quotient_rank(const FiniteAbelianGroup& g, const Int& p) {
  if (!is_probable_prime(p)) fail_input("NotPrime", "p = " + p.str() + " is not prime");
  unsigned rank = 0;
  for (const Int& d : g.invariant_factors())
    if (d % p == 0) ++rank;
  return rank;
}

}  // namespace coverlab::groups
