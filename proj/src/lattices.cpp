#include "lattices.hpp"

#include <algorithm>

namespace coverlab::lattices {

namespace {

void check_dim(std::size_t ambient, const IntVec& v) {
  if (v.size() != ambient)
    fail_input("DimensionMismatch", "vector length " + std::to_string(v.size()) +
                                        " does not match ambient dimension " +
                                        std::to_string(ambient));
}

}  // namespace

Lattice Lattice::from_generators(std::size_t ambient_dim,
                                 const std::vector<IntVec>& generators) {
  for (const auto& g : generators) check_dim(ambient_dim, g);

  std::vector<IntVec> rows = generators;
  std::vector<IntVec> echelon;          // pivot rows in pivot-column order
  std::vector<std::size_t> pivot_cols;  // strictly increasing

  for (std::size_t col = 0; col < ambient_dim; ++col) {
    // Fold every remaining row with a nonzero entry at `col` into one.
    IntVec* pivot_row = nullptr;
    for (auto& r : rows) {
      if (r[col] == 0) continue;
      if (!pivot_row) {
        pivot_row = &r;
        continue;
      }
      Int x, y;
      Int g = ext_gcd((*pivot_row)[col], r[col], x, y);
      const Int a = (*pivot_row)[col] / g, b = r[col] / g;
      for (std::size_t j = 0; j < ambient_dim; ++j) {
        Int top = x * (*pivot_row)[j] + y * r[j];
        Int bot = -b * (*pivot_row)[j] + a * r[j];
        (*pivot_row)[j] = top;
        r[j] = bot;
      }
    }
    if (!pivot_row) continue;
    IntVec row = *pivot_row;
    if (row[col] < 0)
      for (auto& x : row) x = -x;
    // Remove the consumed row from the pool.
    rows.erase(rows.begin() + (pivot_row - rows.data()));
    // Reduce entries above this pivot into [0, pivot).
    for (auto& e : echelon) {
      Int q = floor_div(e[col], row[col]);
      if (q != 0)
        for (std::size_t j = 0; j < ambient_dim; ++j) e[j] -= q * row[j];
    }
    echelon.push_back(std::move(row));
    pivot_cols.push_back(col);
  }

  Lattice out;
  out.ambient_ = ambient_dim;
  out.basis_ = std::move(echelon);
  out.pivots_ = std::move(pivot_cols);
  return out;
}

std::optional<Int> Lattice::index() const {
  if (!full_rank()) return std::nullopt;
  Int det = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) det *= basis_[i][pivots_[i]];
  return det;
}

bool Lattice::contains(const IntVec& v) const {
  check_dim(ambient_, v);
  IntVec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = pivots_[i];
    if (r[c] % basis_[i][c] != 0) return false;
    Int q = r[c] / basis_[i][c];
    if (q != 0)
      for (std::size_t j = 0; j < ambient_; ++j) r[j] -= q * basis_[i][j];
  }
  for (const Int& x : r)
    if (x != 0) return false;
  return true;
}

IntVec Lattice::reduce(IntVec v) const {
  check_dim(ambient_, v);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = pivots_[i];
    Int q = floor_div(v[c], basis_[i][c]);
    if (q != 0)
      for (std::size_t j = 0; j < ambient_; ++j) v[j] -= q * basis_[i][j];
  }
  return v;
}

LatticeCoset::LatticeCoset(Lattice l, IntVec s) : lattice(std::move(l)) {
  check_dim(lattice.ambient_dim(), s);
  shift = lattice.reduce(std::move(s));
}

bool LatticeCoset::contains(const IntVec& v) const {
  check_dim(lattice.ambient_dim(), v);
  IntVec d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = v[i] - shift[i];
  return lattice.contains(d);
}

namespace {

// Iterate residue vectors in [0, n)^dim, axis 0 most significant.
bool next_residue(IntVec& r, const Int& n) {
  std::size_t i = r.size();
  while (i-- > 0) {
    if (r[i] + 1 < n) {
      ++r[i];
      for (std::size_t j = i + 1; j < r.size(); ++j) r[j] = 0;
      return true;
    }
  }
  return false;
}

}  // namespace

LatticeCoverReport verify_lattice_cover_exact(const std::vector<LatticeCoset>& cosets) {
  if (cosets.empty()) fail_input("EmptyCover", "no cosets given");
  const std::size_t dim = cosets.front().lattice.ambient_dim();
  Int n = 1;
  for (const auto& c : cosets) {
    if (c.lattice.ambient_dim() != dim)
      fail_input("DimensionMismatch", "cover parts live in different dimensions");
    auto idx = c.lattice.index();
    if (!idx)
      fail_input("InfiniteIndexMember",
                 "exact residue verification needs every part full rank");
    n = lcm(n, *idx);
  }

  LatticeCoverReport report;
  report.modulus = n;
  report.removal_witnesses.assign(cosets.size(), std::nullopt);

  IntVec r(dim, 0);
  bool more = true;
  while (more) {
    std::size_t hits = 0;
    std::size_t only = 0;
    for (std::size_t i = 0; i < cosets.size(); ++i)
      if (cosets[i].contains(r)) {
        ++hits;
        only = i;
      }
    if (hits == 0 && !report.uncovered_witness) report.uncovered_witness = r;
    if (hits == 1 && !report.removal_witnesses[only]) report.removal_witnesses[only] = r;
    more = next_residue(r, n);
  }

  report.covered = !report.uncovered_witness.has_value();
  report.proper = report.covered;
  for (const auto& w : report.removal_witnesses)
    if (!w) report.proper = false;
  if (!report.covered) report.proper = false;
  return report;
}

namespace {

// Per-axis order 0, 1, -1, 2, -2, ..., radius, -radius.
Int unfold(long step) {
  if (step == 0) return 0;
  long half = (step + 1) / 2;
  return step % 2 == 1 ? Int(half) : Int(-half);
}

}  // namespace

std::optional<IntVec> refute_lattice_cover_search(std::size_t ambient_dim,
                                                  const std::vector<LatticeCoset>& cosets,
                                                  long box_radius) {
  if (box_radius < 1) fail_input("BadRadius", "box radius must be >= 1");
  for (const auto& c : cosets)
    if (c.lattice.ambient_dim() != ambient_dim)
      fail_input("DimensionMismatch", "cover parts live in different dimensions");

  const long steps = 2 * box_radius + 1;
  std::vector<long> counter(ambient_dim, 0);
  for (;;) {
    IntVec v(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) v[i] = unfold(counter[i]);
    bool hit = false;
    for (const auto& c : cosets)
      if (c.contains(v)) {
        hit = true;
        break;
      }
    if (!hit) return v;

    // Axis 0 varies fastest.
    std::size_t i = 0;
    while (i < ambient_dim && counter[i] + 1 == steps) counter[i++] = 0;
    if (i == ambient_dim) break;
    ++counter[i];
  }
  return std::nullopt;
}

NeumannOutcome neumann_certificate(std::size_t ambient_dim,
                                   const std::vector<LatticeCoset>& cosets,
                                   long box_radius) {
  for (std::size_t i = 0; i < cosets.size(); ++i)
    if (auto idx = cosets[i].lattice.index())
      return FiniteIndexCertificate{i, *idx};
  auto witness = refute_lattice_cover_search(ambient_dim, cosets,
                                             std::max<long>(1, box_radius));
  if (witness) return RefutationWitness{*witness};
  return Inconclusive{};
}

}  // namespace coverlab::lattices
