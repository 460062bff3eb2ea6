#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sidon/basis.hpp"
#include "sidon/bigint.hpp"
#include "sidon/blocks.hpp"
#include "sidon/generator.hpp"

namespace sidon {

// Ranges of S_{k2,k1} = { s1 Q1 + s2 p2' Q2 : 1 <= |s1| <= s1_max,
// 1 <= |s2| <= s2_max, p2' in P_k2 }.
struct SRangeBounds {
  int k2 = 0;
  int k1 = 0;
  BigInt q1;      // q_1 ... q_k2
  BigInt q2;      // q_(k2+1) ... q_k1
  BigInt s1_max;  // floor(2^(c(k1^2 + k2^2) - 6) / Q1)
  BigInt s2_max;  // floor(2^(c k1^2 - 3) / Q2)

  bool empty() const { return sgn(s1_max) <= 0 || sgn(s2_max) <= 0; }
};

// One S-range together with the primes p2' it ranges over.
struct SRange {
  SRangeBounds bounds;
  std::vector<std::uint64_t> p2_candidates;
};

struct BadPrimeRecord {
  std::uint64_t p1 = 0;
  int k1 = 0;
  int k2 = 0;
  BigInt s1;
  BigInt s2;
  std::uint64_t p2_prime = 0;

  BigInt s(const SRangeBounds& b) const { return s1 * b.q1 + s2 * big_from_u64(p2_prime) * b.q2; }
};

enum class K2Policy {
  kEligible,    // k_min <= k2 with k2^2 < c/(1-c) k1^2
  kExhaustive,  // every k_min <= k2 <= k1; covers bases without the dyadic condition
};

bool eligible_pair(int k2, int k1, const BlockParams& params);
std::vector<int> eligible_k2(int k1, const BlockParams& params, K2Policy policy = K2Policy::kEligible);

// Throws IneligiblePair when k2 fails the eligibility inequality.
SRangeBounds s_bounds(int k2, int k1, const BlockParams& params, const Basis& basis);

// Same bounds without the eligibility check.
SRangeBounds s_bounds_unchecked(int k2, int k1, const BlockParams& params, const Basis& basis);

// Core search: for each candidate p1 (in order), the first witness s != 0 of
// some range with p1 | s. Solves s1 = -s2 p2' Q2 Q1^-1 (mod p1) for every
// (s2, p2') instead of enumerating S.
std::vector<BadPrimeRecord> find_bad_primes(std::span<const std::uint64_t> p1_candidates, int k1,
                                            std::span<const SRange> ranges);

std::vector<SRange> s_ranges(int k1, const BlockParams& params, const Basis& basis,
                             K2Policy policy = K2Policy::kEligible);

std::vector<BadPrimeRecord> bad_primes(int k1, const BlockParams& params, const Basis& basis,
                                       K2Policy policy = K2Policy::kEligible);

// For witnesses whose k1 satisfies 2^(2c(k1-1)^2 - 6) > 2 * 2^(c(k1^2+k2^2) - 6),
// true when no s is divisible by two distinct primes of `block`.
bool double_hit_bound_applies(int k2, int k1, const BlockParams& params);
bool single_hit(const BigInt& s, std::span<const std::uint64_t> block);

struct PruneSummary {
  int k = 0;
  std::uint64_t block_size = 0;
  std::uint64_t bad_count = 0;
  double ratio = 0.0;  // bad_count / block_size; 0 for empty blocks
};

struct PruneResult {
  SequencePrefix prefix;  // elements over P*
  std::vector<BadPrimeRecord> bad;
  std::vector<PruneSummary> summaries;
};

PruneResult pruned_generate(int k_max, const BlockParams& params, const Basis& basis,
                            K2Policy policy = K2Policy::kEligible);

}  // namespace sidon
