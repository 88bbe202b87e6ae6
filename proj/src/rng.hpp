#pragma once

#include <cstdint>
#include <random>

namespace coverlab {

// Deterministic helpers on top of mt19937_64: std::uniform_int_distribution
// is implementation-defined, so seeded runs draw through these instead.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  // n is tiny everywhere this is used; modulo bias is irrelevant but the
  // rejection loop keeps draws exactly uniform anyway.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

inline std::int64_t rand_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace coverlab
