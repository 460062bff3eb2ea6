#include "sidon/generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sidon/arith.hpp"
#include "sidon/errors.hpp"

namespace sidon {

namespace {

int excluded_index(std::uint64_t p, int k, const Basis& basis) {
  for (int j = 1; j <= k; ++j) {
    if (basis.q(j) == p) return j;
  }
  return 0;
}

}  // namespace

std::vector<BigInt> SequencePrefix::values() const {
  std::vector<BigInt> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.value);
  return out;
}

std::uint64_t edge_or_zero(int j, const BlockParams& params) {
  if (j < params.k_min - 1) return 0;
  return block_upper_edge(j, params);
}

void stream_blocks(int k_max, const BlockParams& params, const Basis& basis, int h,
                   const BlockSink& sink,
                   const std::function<bool(int k, std::uint64_t p)>& keep) {
  const Basis full = basis.extended_to(std::max(k_max, 1));
  const DigitExtractor extractor(full, h);
  for (int k = params.k_min; k <= k_max; ++k) {
    const auto primes = primes_in_block(k, params);
    BlockSummary summary;
    summary.k = k;
    summary.block_size = primes.size();
    std::vector<SidonElement> elements;
    std::vector<ExcludedRecord> excluded;
    for (std::uint64_t p : primes) {
      if (const int j = excluded_index(p, k, full); j != 0) {
        excluded.push_back({p, k, j});
        continue;
      }
      if (keep && !keep(k, p)) continue;
      SidonElement e;
      e.p = p;
      e.k = k;
      e.digits = extractor.digits(p, k);
      e.value = encode_value(e.digits, full);
      elements.push_back(std::move(e));
    }
    std::sort(elements.begin(), elements.end(),
              [](const SidonElement& a, const SidonElement& b) { return a.value < b.value; });
    summary.excluded = excluded.size();
    summary.emitted = elements.size();
    if (!elements.empty()) {
      summary.min_value = elements.front().value;
      summary.max_value = elements.back().value;
    }
    sink(summary, elements, excluded);
  }
}

SequencePrefix generate_blocks(int k_max, const BlockParams& params, const Basis& basis, int h) {
  SequencePrefix prefix;
  prefix.params = params;
  // One extra entry so count_upto can bound the first block past the prefix.
  prefix.basis = basis.synthetic() ? basis : basis.extended_to(k_max + 1);
  prefix.h = h;
  prefix.k_max = k_max;
  stream_blocks(k_max, params, prefix.basis, h,
                [&](const BlockSummary& s, const std::vector<SidonElement>& elems,
                    const std::vector<ExcludedRecord>& excl) {
                  prefix.blocks.push_back(s);
                  prefix.elements.insert(prefix.elements.end(), elems.begin(), elems.end());
                  prefix.excluded.insert(prefix.excluded.end(), excl.begin(), excl.end());
                });
  return prefix;
}

std::vector<std::uint64_t> finite_dlog_sidon_set(std::uint64_t q, std::uint64_t g) {
  if (!is_primitive_root(g, q)) {
    throw Error(Errc::kInvalidArgument,
                std::to_string(g) + " is not a primitive root mod " + std::to_string(q));
  }
  const DiscreteLogTable table(g, q);
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(q)));
  while (root * root > q) --root;
  while ((root + 1) * (root + 1) <= q) ++root;
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_in_interval({1, root})) out.push_back(table.log(p));
  return out;
}

CountReport count_upto(const BigInt& x, const SequencePrefix& prefix) {
  const Basis& basis = prefix.basis;
  const int next = prefix.k_max + 1;
  if (basis.size() < next) {
    throw Error(Errc::kPrefixTooShort, "prefix basis lacks q_" + std::to_string(next));
  }
  // Every element of block k_max + 1 exceeds ((h-1) q + 1) W_(k_max+1).
  const BigInt reach =
      (big_from_u64(static_cast<std::uint64_t>(prefix.h - 1) * basis.q(next)) + 1) *
      basis.weight(next);
  if (x >= reach) {
    throw Error(Errc::kPrefixTooShort,
                "x = " + x.get_str() + " reaches past block " + std::to_string(prefix.k_max));
  }
  CountReport r;
  r.x = x;
  for (const auto& e : prefix.elements) {
    if (e.value <= x) ++r.count;
  }
  if (x < 1) return r;
  int k = 0;
  while (k + 2 <= basis.size() + 1 && basis.weight(k + 2) <= x) ++k;
  r.k = k;
  const std::uint64_t low_edge = edge_or_zero(k, prefix.params);
  std::uint64_t excluded_below = 0;
  for (const auto& ex : prefix.excluded) {
    if (ex.p <= low_edge) ++excluded_below;
  }
  r.lower = prime_pi(low_edge) - excluded_below;
  r.upper = prime_pi(edge_or_zero(k + 2, prefix.params));
  r.bracket_ok = r.lower <= r.count && r.count <= r.upper;
  if (r.count > 0 && x > 1) {
    const long prec = 64;
    r.exponent = std::log2(static_cast<double>(r.count)) / log2(Real(x, prec)).to_double();
  }
  return r;
}

}  // namespace sidon
