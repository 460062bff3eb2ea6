#pragma once

#include <cstdint>
#include <vector>

#include "sidon/bigint.hpp"

namespace sidon {

enum class BasisMode { kDeterministic, kRandom };

struct BasisSource {
  BasisMode mode = BasisMode::kDeterministic;
  std::uint64_t seed = 0;

  static BasisSource deterministic() { return {}; }
  static BasisSource random(std::uint64_t seed) { return {BasisMode::kRandom, seed}; }
};

struct BasisEntry {
  int j;
  std::uint64_t q;  // prime modulus
  std::uint64_t g;  // primitive root mod q
};

// The (prime, primitive root) pairs behind the radix m*q_1, m*q_2, ...
// Immutable; extended_to() returns a longer copy whose prefix is unchanged.
class Basis {
 public:
  // q_j in (2^(2j-1), 2^(2j+1)] for j = 1..count. The random mode draws each
  // q_j uniformly from the primes of its interval with an RNG stream keyed by
  // (seed, j), so a basis extended later agrees with one built long upfront.
  static Basis build(BasisSource source, int scale, int count);

  // Arbitrary entries, used for small synthetic fixtures. Only the primality
  // and primitive-root conditions are checked; the dyadic interval condition
  // is skipped.
  static Basis from_entries(int scale, std::vector<BasisEntry> entries);

  Basis extended_to(int count) const;

  int scale() const { return scale_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<BasisEntry>& entries() const { return entries_; }
  const BasisEntry& entry(int j) const { return entries_.at(static_cast<std::size_t>(j - 1)); }
  std::uint64_t q(int j) const { return entry(j).q; }
  std::uint64_t g(int j) const { return entry(j).g; }
  std::uint64_t radix(int j) const { return static_cast<std::uint64_t>(scale_) * q(j); }
  const BasisSource& source() const { return source_; }
  bool synthetic() const { return synthetic_; }

  // W_j = prod_{i<j} m*q_i; defined for 1 <= j <= size() + 1.
  const BigInt& weight(int j) const;

  // q_a * q_(a+1) * ... * q_b; 1 when a > b.
  BigInt modulus_product(int a, int b) const;

  friend bool operator==(const Basis& a, const Basis& b);

 private:
  Basis() = default;
  void compute_weights();

  int scale_ = 4;
  BasisSource source_;
  bool synthetic_ = false;
  std::vector<BasisEntry> entries_;
  std::vector<BigInt> weights_;
};

Basis build_basis(BasisSource source, int scale, int count);
BigInt radix_weight(const Basis& basis, int j);

// Checks 2^(2j-1) < q_j <= 2^(2j+1).
bool in_dyadic_interval(int j, std::uint64_t q);

}  // namespace sidon
