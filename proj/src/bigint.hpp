#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "error.hpp"

namespace coverlab {

// All group/lattice/polynomial arithmetic is exact; intermediate entries in
// normal-form eliminations are unbounded, so everything rides on cpp_int.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

inline bool fits_int64(const Int& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Int& v) {
  if (!fits_int64(v)) fail_input("Overflow", "integer does not fit in 64 bits: " + v.str());
  return static_cast<std::int64_t>(v);
}

// Floor division/remainder; cpp_int's operator/ truncates toward zero.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

// g = a*x + b*y with g = gcd(a, b) >= 0.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_x = 1, cur_x = 0;
  Int old_y = 0, cur_y = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * cur_x; old_x = cur_x; cur_x = t;
    t = old_y - q * cur_y; old_y = cur_y; cur_y = t;
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  x = old_x;
  y = old_y;
  return old_r;
}

// Multiplicity of p in n; n must be nonzero.
inline unsigned valuation(Int n, const Int& p) {
  unsigned v = 0;
  while (n % p == 0) { n /= p; ++v; }
  return v;
}

// Miller-Rabin with the fixed base set {2,...,37}: deterministic for all
// inputs below 3.3e24, far beyond anything this tool enumerates.
inline bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  Int d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) { d /= 2; ++r; }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = boost::multiprecision::powm(Int(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 0; i + 1 < r; ++i) {
      x = (x * x) % n;
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

inline Int parse_int_literal(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    fail_input("BadInteger", "not an integer literal: " + s);
  }
}

}  // namespace coverlab
