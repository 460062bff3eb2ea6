#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sidon/basis.hpp"
#include "sidon/bigint.hpp"
#include "sidon/blocks.hpp"
#include "sidon/encoder.hpp"

namespace sidon {

// A prime dropped because it equals a basis modulus q_j with j <= k, so its
// j-th digit congruence has no solution.
struct ExcludedRecord {
  std::uint64_t p;
  int k;
  int j;
};

struct BlockSummary {
  int k = 0;
  std::uint64_t block_size = 0;  // |P_k|
  std::uint64_t excluded = 0;
  std::uint64_t emitted = 0;
  std::optional<BigInt> min_value;
  std::optional<BigInt> max_value;
};

struct SequencePrefix {
  BlockParams params;
  Basis basis = Basis::build(BasisSource::deterministic(), 4, 1);
  int h = 2;
  int k_max = 0;
  std::vector<SidonElement> elements;  // sorted by (k, value)
  std::vector<ExcludedRecord> excluded;
  std::vector<BlockSummary> blocks;

  std::vector<BigInt> values() const;
};

// Called once per block, after its elements were computed, in increasing k.
using BlockSink = std::function<void(const BlockSummary&, const std::vector<SidonElement>&,
                                     const std::vector<ExcludedRecord>&)>;

// Streams blocks k_min..k_max; memory holds one block at a time. `keep`
// (optional) filters primes before their digits are computed.
void stream_blocks(int k_max, const BlockParams& params, const Basis& basis, int h,
                   const BlockSink& sink,
                   const std::function<bool(int k, std::uint64_t p)>& keep = {});

SequencePrefix generate_blocks(int k_max, const BlockParams& params, const Basis& basis, int h);

// { log_g p : p prime, p <= sqrt(q) } as residues mod q - 1, ordered by p.
std::vector<std::uint64_t> finite_dlog_sidon_set(std::uint64_t q, std::uint64_t g);

struct CountReport {
  BigInt x;
  std::uint64_t count = 0;  // A(x)
  // Largest k with W_(k+1) <= x, or -1 when x < 1.
  int k = -1;
  std::uint64_t lower = 0;  // pi(2^E(k)) - |excluded <= 2^E(k)|
  std::uint64_t upper = 0;  // pi(2^E(k+2))
  bool bracket_ok = true;
  std::optional<double> exponent;  // log2 A(x) / log2 x, approximate
};

// Throws PrefixTooShort when elements beyond the prefix could be <= x.
CountReport count_upto(const BigInt& x, const SequencePrefix& prefix);

// floor(2^E(j)), or 0 for j below the first block edge.
std::uint64_t edge_or_zero(int j, const BlockParams& params);

}  // namespace sidon
