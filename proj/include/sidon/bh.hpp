#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sidon/basis.hpp"
#include "sidon/bigint.hpp"
#include "sidon/blocks.hpp"
#include "sidon/generator.hpp"

namespace sidon {

struct BhParams {
  int h = 3;
  BlockParams blocks;

  // c = sqrt((h-1)^2 + 1) - (h-1), tapered blocks, offset 0, k_min 3.
  static BhParams make(int h, long precision_bits = kDefaultPrecisionBits,
                       TaperLog taper_log = TaperLog::kNatural);

  // |-1 + 2c(h-1)/(1-c) - c|, which vanishes for this c.
  Real identity_residual() const;
};

SequencePrefix bh_generate(int k_max, const BhParams& bh, const Basis& basis);

struct BhPruneResult {
  SequencePrefix survivors;
  std::vector<SidonElement> removed;  // the empirical B_k(q), ordered by (k, value)
};

// Indices of every value that is the largest element of some repeated l-sum,
// 2 <= l <= h, among `values`. Dropping them leaves a B_h set.
std::vector<std::size_t> largest_in_repeated_sums(std::span<const BigInt> values, int h);

BhPruneResult bh_prune(const SequencePrefix& prefix, int h);

struct MonteCarloTrial {
  std::uint64_t trial_seed = 0;
  std::vector<std::uint64_t> q;  // the random basis primes q_1..q_kmax
  std::vector<std::uint64_t> block_size;
  std::vector<std::uint64_t> removed;
  std::vector<double> ratio;  // per k = k_min..k_max
};

struct MonteCarloSummary {
  int k = 0;
  double mean_ratio = 0.0;
  double max_ratio = 0.0;
};

struct MonteCarloReport {
  int h = 3;
  std::uint64_t seed = 0;
  int trials = 0;
  int k_min = 3;
  int k_max = 0;
  std::vector<MonteCarloTrial> per_trial;
  std::vector<MonteCarloSummary> per_k;
};

MonteCarloReport montecarlo_bad_ratio(int h, int k_max, int trials, std::uint64_t seed,
                                      long precision_bits = kDefaultPrecisionBits);

}  // namespace sidon
