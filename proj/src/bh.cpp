#include "sidon/bh.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "sidon/auditor.hpp"
#include "sidon/errors.hpp"

namespace sidon {

BhParams BhParams::make(int h, long precision_bits, TaperLog taper_log) {
  if (h < 3) throw Error(Errc::kInvalidArgument, "B_h construction needs h >= 3");
  BhParams p;
  p.h = h;
  p.blocks = BlockParams::tapered(GrowthConstant::bh(h), precision_bits);
  p.blocks.taper_log = taper_log;
  return p;
}

Real BhParams::identity_residual() const {
  const long prec = blocks.working_precision();
  const Real c = blocks.c.value(prec);
  const Real one(1, prec);
  return abs(Real(-1, prec) + Real(2 * (h - 1), prec) * c / (one - c) - c);
}

SequencePrefix bh_generate(int k_max, const BhParams& bh, const Basis& basis) {
  if (basis.scale() != bh.h * bh.h) {
    throw Error(Errc::kInvalidArgument, "B_" + std::to_string(bh.h) + " needs basis scale " +
                                            std::to_string(bh.h * bh.h));
  }
  return generate_blocks(k_max, bh.blocks, basis, bh.h);
}

std::vector<std::size_t> largest_in_repeated_sums(std::span<const BigInt> values, int h) {
  std::set<std::size_t> largest;
  for (int l = 2; l <= h; ++l) {
    for (const auto& c : find_collisions(values, l)) largest.insert(c.left.front());
  }
  return {largest.begin(), largest.end()};
}

BhPruneResult bh_prune(const SequencePrefix& prefix, int h) {
  const auto values = prefix.values();
  const auto drop = largest_in_repeated_sums(values, h);
  BhPruneResult result;
  result.survivors = prefix;
  result.survivors.elements.clear();
  std::size_t next = 0;
  for (std::size_t i = 0; i < prefix.elements.size(); ++i) {
    if (next < drop.size() && drop[next] == i) {
      result.removed.push_back(prefix.elements[i]);
      ++next;
    } else {
      result.survivors.elements.push_back(prefix.elements[i]);
    }
  }
  for (auto& block : result.survivors.blocks) {
    block.emitted = 0;
    block.min_value.reset();
    block.max_value.reset();
    for (const auto& e : result.survivors.elements) {
      if (e.k != block.k) continue;
      ++block.emitted;
      if (!block.min_value) block.min_value = e.value;
      block.max_value = e.value;
    }
  }
  return result;
}

MonteCarloReport montecarlo_bad_ratio(int h, int k_max, int trials, std::uint64_t seed,
                                      long precision_bits) {
  if (trials < 1) throw Error(Errc::kInvalidArgument, "trials must be >= 1");
  const BhParams bh = BhParams::make(h, precision_bits);
  MonteCarloReport report;
  report.h = h;
  report.seed = seed;
  report.trials = trials;
  report.k_min = bh.blocks.k_min;
  report.k_max = k_max;

  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 master(seq);
  for (int t = 0; t < trials; ++t) {
    MonteCarloTrial trial;
    trial.trial_seed = master();
    const Basis basis = Basis::build(BasisSource::random(trial.trial_seed), h * h, k_max);
    for (const auto& e : basis.entries()) trial.q.push_back(e.q);
    const SequencePrefix prefix = bh_generate(k_max, bh, basis);
    const BhPruneResult pruned = bh_prune(prefix, h);
    for (const auto& block : prefix.blocks) {
      const auto removed = static_cast<std::uint64_t>(
          std::count_if(pruned.removed.begin(), pruned.removed.end(),
                        [&](const SidonElement& e) { return e.k == block.k; }));
      trial.block_size.push_back(block.block_size);
      trial.removed.push_back(removed);
      trial.ratio.push_back(block.block_size == 0
                                ? 0.0
                                : static_cast<double>(removed) / static_cast<double>(block.block_size));
    }
    report.per_trial.push_back(std::move(trial));
  }
  for (int k = report.k_min; k <= k_max; ++k) {
    const auto idx = static_cast<std::size_t>(k - report.k_min);
    MonteCarloSummary s;
    s.k = k;
    double total = 0.0;
    for (const auto& trial : report.per_trial) {
      total += trial.ratio[idx];
      s.max_ratio = std::max(s.max_ratio, trial.ratio[idx]);
    }
    s.mean_ratio = total / trials;
    report.per_k.push_back(s);
  }
  return report;
}

}  // namespace sidon
