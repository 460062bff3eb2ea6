#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sidon/bigint.hpp"
#include "sidon/blocks.hpp"

namespace sidon {

// Polynomial over GF(2), bit i holding the coefficient of X^i. Degree < 64.
class Gf2Poly {
 public:
  constexpr Gf2Poly() = default;
  constexpr explicit Gf2Poly(std::uint64_t bits) : bits_(bits) {}

  static Gf2Poly x() { return Gf2Poly(2); }
  static Gf2Poly one() { return Gf2Poly(1); }
  // Most significant coefficient first, e.g. "b" for X^3 + X + 1.
  static Gf2Poly from_hex(const std::string& hex);

  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  // -1 for the zero polynomial.
  int degree() const;
  std::string to_hex() const;
  // "X^3+X+1"
  std::string to_string() const;

  friend Gf2Poly operator+(Gf2Poly a, Gf2Poly b) { return Gf2Poly(a.bits_ ^ b.bits_); }
  friend bool operator==(Gf2Poly, Gf2Poly) = default;
  friend auto operator<=>(Gf2Poly a, Gf2Poly b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// Carry-less product; both degrees must sum below 64.
Gf2Poly clmul(Gf2Poly a, Gf2Poly b);
Gf2Poly gf2_mod(Gf2Poly a, Gf2Poly m);
Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly gf2_mulmod(Gf2Poly a, Gf2Poly b, Gf2Poly m);
Gf2Poly gf2_powmod(Gf2Poly base, std::uint64_t exp, Gf2Poly m);

// Rabin's test: X^(2^d) = X mod f and gcd(X^(2^(d/r)) - X, f) = 1 for each
// prime r | d.
bool is_irreducible(Gf2Poly f);
// No monic factor of degree 1..d/2 (plain trial division).
bool is_irreducible_by_trial_division(Gf2Poly f);

constexpr int kMaxIrreducibleDegree = 24;

// Monic irreducibles of degree d ascending by bit pattern. Throws
// DegreeTooLarge past kMaxIrreducibleDegree.
std::vector<Gf2Poly> irreducibles_of_degree(int d);

// (1/d) sum_{e | d} mu(e) 2^(d/e)
std::uint64_t irreducible_count(int d);

// Least residue (by bit pattern) of order 2^n - 1 mod q. Throws
// NotIrreducible.
Gf2Poly gf2_generator(Gf2Poly q);

bool gf2_is_generator(Gf2Poly g, Gf2Poly q);

// Unique e in [0, 2^n - 2] with g^e = a mod q; baby-step giant-step over
// residues keyed by bit pattern. Throws DLogUndefined when a = 0 mod q.
std::uint64_t gf2_discrete_log(Gf2Poly g, Gf2Poly a, Gf2Poly q);

// { x(p) : p irreducible, deg p < n/2 } in Z_(2^n - 1), ordered by p.
std::vector<std::uint64_t> gf2_finite_sidon(int n, Gf2Poly q);

struct Gf2BasisEntry {
  int j;
  Gf2Poly q;  // irreducible, degree 2j - 1
  Gf2Poly g;  // generator of (GF(2)[X]/q)*
};

class Gf2Basis {
 public:
  // Least irreducible of degree 2j-1 and least generator for j = 1..count.
  static Gf2Basis deterministic(int count);

  int size() const { return static_cast<int>(entries_.size()); }
  const Gf2BasisEntry& entry(int j) const { return entries_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<Gf2BasisEntry>& entries() const { return entries_; }

  // 2^(j^2 - 1)
  static BigInt weight(int j);
  // [2^(2j-1) + 1, 2^(2j) - 1]
  static std::uint64_t window_lo(int j) { return (std::uint64_t{1} << (2 * j - 1)) + 1; }
  static std::uint64_t window_hi(int j) { return (std::uint64_t{1} << (2 * j)) - 1; }

 private:
  std::vector<Gf2BasisEntry> entries_;
};

// The unique x in [2^(2j-1)+1, 2^(2j)-1] with x = d (mod 2^(2j-1) - 1).
std::uint64_t gf2_lift_to_window(std::uint64_t d, int j);

struct Gf2Element {
  Gf2Poly p;
  int k = 0;
  std::vector<std::uint64_t> digits;  // x_1..x_k
  BigInt value;
};

struct Gf2Excluded {
  Gf2Poly p;
  int k;
  int j;
};

struct Gf2Prefix {
  int k_max = 0;
  std::vector<Gf2Element> elements;  // sorted by (k, value)
  std::vector<Gf2Excluded> excluded;
  std::vector<std::vector<Gf2Poly>> blocks;  // blocks[k - k_min], every irreducible of block k

  std::vector<BigInt> values() const;
};

// Degrees of block k: c(k-1)^2 < deg <= c k^2 (params.offset and taper are
// ignored).
std::pair<int, int> gf2_block_degrees(int k, const BlockParams& params);

Gf2Prefix gf2_generate_blocks(int k_max, const BlockParams& params, const Gf2Basis& basis);

}  // namespace sidon
