#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "bigint.hpp"
#include "lattices.hpp"

namespace coverlab::witnesses {

// ---------------------------------------------------------------------------
// Z[x]: the three-subring cover decided by parities of f(0) and f(1).

// Canonical form: constant term first, no trailing zeros; zero is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  Int eval(const Int& x) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial&) const = default;

  std::string to_string() const;

 private:
  std::vector<Int> c_;
};

enum class ZxPart { s1, s2, s3 };

const char* zx_part_name(ZxPart p);

// S1: f(0) even; S2: f(1) even; S3: f(0)+f(1) even. Never empty: the four
// parity classes of (f(0), f(1)) all hit at least one part.
std::set<ZxPart> zx_membership(const IntPolynomial& f);

struct ZxClosureReport {
  bool ok = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  // first violation, if any
  std::optional<IntPolynomial> lhs, rhs;
  std::string failed_op;
};

// Draws random pairs inside the part and checks sum, difference and product
// stay inside. samples must be >= 1.
ZxClosureReport zx_closure_check(ZxPart part, std::uint64_t samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Unit groups and the exponent-lattice cover.

struct UnitExponentVector {
  Int e1, e2;
  bool operator==(const UnitExponentVector&) const = default;
};

// The three index-2 sublattices of Z^2 whose union is all of Z^2, spanned by
// {(1,0),(1,2)}, {(0,1),(2,1)} and {(1,1),(-1,1)}.
const std::array<lattices::Lattice, 3>& unit_cover_lattices();

// Exponents of the distinguished multiplicatively independent pair 2, 3 in
// the factorization of a nonzero rational (denominator factors negative).
UnitExponentVector unit_exponents(const Rat& q);

enum class UnitPart { m1, m2, m3 };

const char* unit_part_name(UnitPart p);

// Mi iff the exponent vector lies in the i-th cover lattice; never empty.
std::set<UnitPart> semigroup_membership(const Rat& q);

// ---------------------------------------------------------------------------
// Rational functions over the p-element field.

// Dense polynomial over F_p, trailing zeros trimmed.
class GfpPoly {
 public:
  GfpPoly() = default;
  GfpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static GfpPoly zero(std::uint32_t p) { return GfpPoly(p, {}); }
  static GfpPoly constant(std::uint32_t p, std::uint32_t c) { return GfpPoly(p, {c}); }
  static GfpPoly monomial(std::uint32_t p, std::uint32_t c, std::size_t deg);

  std::uint32_t characteristic() const { return p_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::uint32_t leading() const { return c_.back(); }

  std::uint32_t eval(std::uint32_t x) const;

  GfpPoly operator+(const GfpPoly& o) const;
  GfpPoly operator-(const GfpPoly& o) const;
  GfpPoly operator*(const GfpPoly& o) const;
  // (quotient, remainder), divisor nonzero
  std::pair<GfpPoly, GfpPoly> divmod(const GfpPoly& d) const;
  GfpPoly scaled(std::uint32_t c) const;

  bool operator==(const GfpPoly&) const = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> c_;
  void trim();
  void check_same_field(const GfpPoly& o) const;
};

GfpPoly gfp_gcd(GfpPoly a, GfpPoly b);
std::uint32_t gfp_inverse(std::uint32_t p, std::uint32_t a);

// Element of F_p(t) in canonical reduced form: gcd(num, den) = 1, den monic.
class RationalFunction {
 public:
  explicit RationalFunction(std::uint32_t p) : num_(GfpPoly::zero(p)), den_(GfpPoly::constant(p, 1)) {}
  RationalFunction(GfpPoly num, GfpPoly den);

  static RationalFunction from_poly(GfpPoly f);
  static RationalFunction tau(std::uint32_t p);  // the transcendental generator

  std::uint32_t characteristic() const { return num_.characteristic(); }
  const GfpPoly& num() const { return num_; }
  const GfpPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction negated() const;
  RationalFunction inverted() const;

  bool operator==(const RationalFunction&) const = default;

  std::string to_string() const;

 private:
  GfpPoly num_, den_;
};

// The proper subfield of F_p(t) generated by t^k, k >= 2.
struct SubfieldSpec {
  std::uint32_t p = 5;
  std::uint32_t k = 2;
};

// In reduced form, membership in F_p(t^k) is exactly: numerator and
// denominator supported on exponents divisible by k.
bool rf_subfield_member(const RationalFunction& f, const SubfieldSpec& h);

// Positive-characteristic exponent backend: exponents of t and t+1 in the
// factorization of a nonzero rational function.
UnitExponentVector unit_exponents(const RationalFunction& f);
std::set<UnitPart> semigroup_membership(const RationalFunction& f);

// ---------------------------------------------------------------------------
// Coset-cover refuter for F_p(t) against cosets of F_p(t^k).

enum class CosetMode { additive, multiplicative };

struct RefuteRequest {
  SubfieldSpec subfield;
  std::vector<RationalFunction> shifts;
  CosetMode mode = CosetMode::additive;
  long degree_bound = 6;
};

struct UncoveredWitness {
  RationalFunction element;
};

// Two distinct lambda in the subfield landing a_i + a_j*lambda in the same
// coset; forces a_j into the subfield, contradicting the decomposition.
struct CollisionCertificate {
  std::size_t i = 0, j = 0;
  RationalFunction lambda1, lambda2;
  std::size_t coset_index = 0;
};

using RefutationCertificate = std::variant<UncoveredWitness, CollisionCertificate>;

struct RefuteOutcome {
  std::optional<RefutationCertificate> certificate;
  bool inconclusive() const { return !certificate.has_value(); }
};

bool element_in_coset(const RefuteRequest& req, const RationalFunction& x, std::size_t part);

// Witness search first over a deterministic candidate ladder (monomials,
// then binomials, then their reciprocals, by increasing degree), then the
// pigeonhole collision search; inconclusive only when both exhaust.
RefuteOutcome refute_coset_cover(const RefuteRequest& req);

std::optional<CollisionCertificate> find_collision_certificate(const RefuteRequest& req);

// Independent re-verification of a certificate against the request.
bool verify_refutation(const RefuteRequest& req, const RefutationCertificate& cert);

}  // namespace coverlab::witnesses
