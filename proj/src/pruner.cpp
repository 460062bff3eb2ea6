#include "sidon/pruner.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sidon/arith.hpp"
#include "sidon/errors.hpp"

namespace sidon {

namespace {

// floor(2^exponent / divisor), refusing answers that sit within the guard band.
BigInt floor_pow2_over(const Real& exponent, const BigInt& divisor, long prec) {
  const Real quotient = exp2(exponent) / Real(divisor, prec);
  const BigInt n = floor_to_int(quotient);
  const Real guard = power_of_two(-kGuardBits, prec);
  const Real rel_lo = abs(Real(n, prec) - quotient);
  const Real rel_hi = abs(Real(n + 1, prec) - quotient);
  if ((n > 0 && rel_lo < guard * quotient) || rel_hi < guard * quotient) {
    throw Error(Errc::kPrecisionAmbiguity, "S-range bound within the guard band of an integer");
  }
  return n;
}

BigInt mod_floor(const BigInt& a, std::uint64_t m) {
  BigInt r = a % big_from_u64(m);
  if (sgn(r) < 0) r += big_from_u64(m);
  return r;
}

}  // namespace

bool eligible_pair(int k2, int k1, const BlockParams& params) {
  if (k2 < params.k_min || k2 > k1) return false;
  const long prec = params.working_precision();
  const Real c = params.c.value(prec);
  const Real lhs(static_cast<long>(k2) * k2, prec);
  const Real rhs = c / (Real(1, prec) - c) * Real(static_cast<long>(k1) * k1, prec);
  return lhs < rhs;
}

std::vector<int> eligible_k2(int k1, const BlockParams& params, K2Policy policy) {
  std::vector<int> out;
  for (int k2 = params.k_min; k2 <= k1; ++k2) {
    if (policy == K2Policy::kExhaustive || eligible_pair(k2, k1, params)) out.push_back(k2);
  }
  return out;
}

SRangeBounds s_bounds_unchecked(int k2, int k1, const BlockParams& params, const Basis& basis) {
  const long prec = params.working_precision();
  const Real c = params.c.value(prec);
  SRangeBounds b;
  b.k2 = k2;
  b.k1 = k1;
  b.q1 = basis.modulus_product(1, k2);
  b.q2 = basis.modulus_product(k2 + 1, k1);
  const Real e1 = c * Real(static_cast<long>(k1) * k1 + static_cast<long>(k2) * k2, prec) -
                  Real(6, prec);
  const Real e2 = c * Real(static_cast<long>(k1) * k1, prec) - Real(3, prec);
  b.s1_max = floor_pow2_over(e1, b.q1, prec);
  b.s2_max = floor_pow2_over(e2, b.q2, prec);
  return b;
}

SRangeBounds s_bounds(int k2, int k1, const BlockParams& params, const Basis& basis) {
  if (!eligible_pair(k2, k1, params)) {
    throw Error(Errc::kIneligiblePair, "k2 = " + std::to_string(k2) +
                                           " is not eligible for k1 = " + std::to_string(k1));
  }
  return s_bounds_unchecked(k2, k1, params, basis);
}

std::vector<BadPrimeRecord> find_bad_primes(std::span<const std::uint64_t> p1_candidates, int k1,
                                            std::span<const SRange> ranges) {
  std::vector<BadPrimeRecord> out;
  for (std::uint64_t p1 : p1_candidates) {
    bool found = false;
    for (const auto& range : ranges) {
      const auto& b = range.bounds;
      if (b.empty()) continue;
      const std::uint64_t q1_mod = big_to_u64(mod_floor(b.q1, p1));
      const std::uint64_t q2_mod = big_to_u64(mod_floor(b.q2, p1));
      const bool q1_invertible = q1_mod != 0;
      const std::uint64_t q1_inv = q1_invertible ? inverse_mod(q1_mod, p1) : 0;
      const BigInt p1_big = big_from_u64(p1);
      for (BigInt s2_abs = 1; s2_abs <= b.s2_max && !found; ++s2_abs) {
        for (int sign : {1, -1}) {
          if (found) break;
          const BigInt s2 = sign * s2_abs;
          const std::uint64_t s2_mod = big_to_u64(mod_floor(s2, p1));
          for (std::uint64_t p2 : range.p2_candidates) {
            // t = s2 p2' Q2 mod p1; need s1 Q1 = -t (mod p1).
            const std::uint64_t t = mul_mod(mul_mod(s2_mod, p2 % p1, p1), q2_mod, p1);
            BigInt residue;
            if (q1_invertible) {
              residue = big_from_u64(mul_mod((p1 - t) % p1, q1_inv, p1));
            } else if (t == 0) {
              residue = 0;  // any s1 works
            } else {
              continue;
            }
            // Candidates s1 = residue + m p1 within [-s1_max, s1_max] \ {0},
            // scanned from the smallest |s1|.
            std::vector<BigInt> candidates;
            const BigInt up = residue;
            const BigInt down = residue - p1_big;
            for (BigInt s1 = up; s1 <= b.s1_max && candidates.size() < 3; s1 += p1_big) {
              if (sgn(s1) != 0) candidates.push_back(s1);
            }
            for (BigInt s1 = down; -s1 <= b.s1_max && candidates.size() < 6; s1 -= p1_big) {
              if (sgn(s1) != 0) candidates.push_back(s1);
            }
            for (const auto& s1 : candidates) {
              BadPrimeRecord rec{p1, k1, b.k2, s1, s2, p2};
              const BigInt s = rec.s(b);
              if (sgn(s) == 0) continue;
              out.push_back(std::move(rec));
              found = true;
              break;
            }
            if (found) break;
          }
        }
      }
      if (found) break;
    }
  }
  return out;
}

std::vector<SRange> s_ranges(int k1, const BlockParams& params, const Basis& basis,
                             K2Policy policy) {
  std::vector<SRange> ranges;
  for (int k2 : eligible_k2(k1, params, policy)) {
    SRange r;
    r.bounds = s_bounds_unchecked(k2, k1, params, basis);
    if (!r.bounds.empty()) r.p2_candidates = primes_in_block(k2, params);
    ranges.push_back(std::move(r));
  }
  return ranges;
}

std::vector<BadPrimeRecord> bad_primes(int k1, const BlockParams& params, const Basis& basis,
                                       K2Policy policy) {
  const Basis full = basis.extended_to(k1);
  const auto ranges = s_ranges(k1, params, full, policy);
  const bool any = std::any_of(ranges.begin(), ranges.end(),
                               [](const SRange& r) { return !r.bounds.empty(); });
  if (!any) return {};
  const auto block = primes_in_block(k1, params);
  return find_bad_primes(block, k1, ranges);
}

bool double_hit_bound_applies(int k2, int k1, const BlockParams& params) {
  const long prec = params.working_precision();
  const Real c = params.c.value(prec);
  const Real lhs = Real(2, prec) * c * Real(static_cast<long>(k1 - 1) * (k1 - 1), prec) -
                   Real(6, prec);
  const Real rhs = Real(1, prec) + c * Real(static_cast<long>(k1) * k1 + static_cast<long>(k2) * k2, prec) -
                   Real(6, prec);
  return rhs < lhs;
}

bool single_hit(const BigInt& s, std::span<const std::uint64_t> block) {
  int hits = 0;
  for (std::uint64_t p : block) {
    if (mpz_divisible_ui_p(s.get_mpz_t(), p) != 0 && ++hits > 1) return false;
  }
  return true;
}

PruneResult pruned_generate(int k_max, const BlockParams& params, const Basis& basis,
                            K2Policy policy) {
  PruneResult result;
  const Basis full = basis.synthetic() ? basis : basis.extended_to(k_max + 1);
  std::set<std::uint64_t> bad_set;
  for (int k1 = params.k_min; k1 <= k_max; ++k1) {
    for (auto& rec : bad_primes(k1, params, full, policy)) {
      bad_set.insert(rec.p1);
      result.bad.push_back(std::move(rec));
    }
  }
  result.prefix.params = params;
  result.prefix.basis = full;
  result.prefix.h = 2;
  result.prefix.k_max = k_max;
  stream_blocks(
      k_max, params, full, 2,
      [&](const BlockSummary& s, const std::vector<SidonElement>& elems,
          const std::vector<ExcludedRecord>& excl) {
        result.prefix.blocks.push_back(s);
        result.prefix.elements.insert(result.prefix.elements.end(), elems.begin(), elems.end());
        result.prefix.excluded.insert(result.prefix.excluded.end(), excl.begin(), excl.end());
        PruneSummary ps;
        ps.k = s.k;
        ps.block_size = s.block_size;
        ps.bad_count = static_cast<std::uint64_t>(std::count_if(
            result.bad.begin(), result.bad.end(), [&](const BadPrimeRecord& r) { return r.k1 == s.k; }));
        ps.ratio = ps.block_size == 0 ? 0.0
                                      : static_cast<double>(ps.bad_count) / static_cast<double>(ps.block_size);
        result.summaries.push_back(ps);
      },
      [&](int, std::uint64_t p) { return bad_set.count(p) == 0; });
  return result;
}

}  // namespace sidon
