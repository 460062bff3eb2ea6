#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sidon {

// Half-open prime interval (lo, hi].
struct PrimeInterval {
  std::uint64_t lo;
  std::uint64_t hi;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Modular inverse of a mod m; requires gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

std::uint64_t next_prime_above(std::uint64_t n);

// (prime, exponent) pairs, ascending; trial division.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// Segmented sieve over (lo, hi].
std::vector<std::uint64_t> primes_in_interval(PrimeInterval iv);

// pi(n), the number of primes <= n.
std::uint64_t prime_pi(std::uint64_t n);

bool is_primitive_root(std::uint64_t g, std::uint64_t q);

// Least g >= 2 of multiplicative order q - 1. Throws InvalidModulus unless q
// is an odd prime.
std::uint64_t smallest_primitive_root(std::uint64_t q);

// Baby-step giant-step table for a fixed primitive root g mod q. Immutable
// after construction, so one instance can serve concurrent lookups.
class DiscreteLogTable {
 public:
  DiscreteLogTable(std::uint64_t g, std::uint64_t q);

  // The unique d in [0, q-2] with g^d = a (mod q). Throws DLogUndefined when
  // a = 0 (mod q).
  std::uint64_t log(std::uint64_t a) const;

  std::uint64_t generator() const { return g_; }
  std::uint64_t modulus() const { return q_; }

 private:
  std::uint64_t g_;
  std::uint64_t q_;
  std::uint64_t order_;
  std::uint64_t stride_;
  std::uint64_t giant_;  // g^-stride
  std::vector<std::pair<std::uint64_t, std::uint64_t>> baby_;  // (g^i, i), sorted by residue
};

std::uint64_t discrete_log(std::uint64_t g, std::uint64_t a, std::uint64_t q);

// The unique x in [(h-1)q + 1, hq - 1] with x = d (mod q - 1).
std::uint64_t lift_to_window(std::uint64_t d, std::uint64_t q, int h);

}  // namespace sidon
