#include "sidon/pruner.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "sidon/auditor.hpp"
#include "sidon/errors.hpp"

namespace sidon {
namespace {

const BlockParams kSqrt2 = BlockParams::sidon(GrowthConstant::sqrt2_minus_1());
const Basis kDefault = build_basis(BasisSource::deterministic(), 4, 10);

TEST(SBounds, Examples) {
  const auto b25 = s_bounds(2, 5, kSqrt2, kDefault);
  EXPECT_EQ(b25.q1, 33);
  EXPECT_EQ(b25.q2, BigInt(37 * 131 * 521));
  EXPECT_EQ(b25.q1 * b25.q2, kDefault.modulus_product(1, 5));
  EXPECT_EQ(b25.s1_max, 1);
  EXPECT_EQ(b25.s2_max, 0);
  EXPECT_TRUE(b25.empty());

  const auto b45 = s_bounds(4, 5, kSqrt2, kDefault);
  EXPECT_EQ(b45.q1, 159951);
  EXPECT_EQ(b45.s1_max, 0);

  EXPECT_EQ(eligible_k2(5, kSqrt2), (std::vector<int>{2, 3, 4}));
  EXPECT_THROW(s_bounds(5, 5, kSqrt2, kDefault), Error);
}

TEST(SBounds, AllEmptyAtDeskScale) {
  for (int k1 = 2; k1 <= 7; ++k1) {
    for (int k2 : eligible_k2(k1, kSqrt2)) {
      EXPECT_TRUE(s_bounds(k2, k1, kSqrt2, kDefault).empty()) << k2 << "," << k1;
    }
    EXPECT_TRUE(bad_primes(k1, kSqrt2, kDefault).empty());
  }
}

// Bounds against a plain double evaluation, where not too close to an integer.
TEST(SBounds, MatchDoubleReference) {
  const double c = std::sqrt(2.0) - 1;
  for (int k1 = 2; k1 <= 9; ++k1) {
    for (int k2 = 2; k2 <= k1; ++k2) {
      const auto b = s_bounds_unchecked(k2, k1, kSqrt2, kDefault);
      const double s1 = std::exp2(c * (k1 * k1 + k2 * k2) - 6) / b.q1.get_d();
      const double s2 = std::exp2(c * k1 * k1 - 3) / b.q2.get_d();
      if (std::abs(s1 - std::round(s1)) > 1e-6) EXPECT_EQ(b.s1_max.get_d(), std::floor(s1));
      if (std::abs(s2 - std::round(s2)) > 1e-6) EXPECT_EQ(b.s2_max.get_d(), std::floor(s2));
    }
  }
}

TEST(FindBadPrimes, PlantedWitness) {
  // S = { s1 * 6 + s2 * p2 * 35 : |s1| <= 4, |s2| <= 1, p2 in {2} }.
  SRange r;
  r.bounds.k2 = 2;
  r.bounds.k1 = 4;
  r.bounds.q1 = 6;
  r.bounds.q2 = 35;
  r.bounds.s1_max = 4;
  r.bounds.s2_max = 1;
  r.p2_candidates = {2};
  const std::vector<SRange> ranges = {r};
  // 1*6 + 1*70 = 76 = 4 * 19; -3*6 + 70 = 52 = 4*13; 4*6 - 70 = -46 = -2 * 23.
  const std::vector<std::uint64_t> cands = {13, 17, 19, 23, 29, 31, 97};
  const auto bad = find_bad_primes(cands, 4, ranges);
  std::set<std::uint64_t> got;
  for (const auto& rec : bad) {
    got.insert(rec.p1);
    const BigInt s = rec.s(r.bounds);
    EXPECT_NE(sgn(s), 0);
    EXPECT_TRUE(mpz_divisible_ui_p(s.get_mpz_t(), rec.p1));
    EXPECT_LE(abs(rec.s1), r.bounds.s1_max);
    EXPECT_GE(abs(rec.s1), 1);
    EXPECT_LE(abs(rec.s2), r.bounds.s2_max);
  }
  // Brute force over the whole of S.
  std::set<std::uint64_t> want;
  for (long s1 = -4; s1 <= 4; ++s1) {
    for (long s2 : {-1L, 1L}) {
      if (s1 == 0) continue;
      const long s = s1 * 6 + s2 * 70;
      for (auto p : cands) {
        if (s != 0 && s % static_cast<long>(p) == 0) want.insert(p);
      }
    }
  }
  EXPECT_EQ(got, want);
  EXPECT_TRUE(want.count(19));
}

TEST(FindBadPrimes, RandomRangesAgainstEnumeration) {
  std::mt19937_64 rng(7);
  const std::vector<std::uint64_t> cands = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163};
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<SRange> ranges(2);
    for (auto& r : ranges) {
      r.bounds.q1 = static_cast<long>(rng() % 40 + 1);
      r.bounds.q2 = static_cast<long>(rng() % 40 + 1);
      r.bounds.s1_max = static_cast<long>(rng() % 6);
      r.bounds.s2_max = static_cast<long>(rng() % 3);
      r.p2_candidates = {2 + rng() % 20, 2 + rng() % 20};
    }
    std::set<std::uint64_t> want;
    for (const auto& r : ranges) {
      const long a = r.bounds.s1_max.get_si(), bmax = r.bounds.s2_max.get_si();
      for (long s1 = -a; s1 <= a; ++s1) {
        for (long s2 = -bmax; s2 <= bmax; ++s2) {
          if (s1 == 0 || s2 == 0) continue;
          for (auto p2 : r.p2_candidates) {
            const long s = s1 * r.bounds.q1.get_si() + s2 * static_cast<long>(p2) * r.bounds.q2.get_si();
            for (auto p : cands) {
              if (s != 0 && s % static_cast<long>(p) == 0) want.insert(p);
            }
          }
        }
      }
    }
    std::set<std::uint64_t> got;
    for (const auto& rec : find_bad_primes(cands, 9, ranges)) got.insert(rec.p1);
    ASSERT_EQ(got, want) << trial;
  }
}

TEST(PrunedGenerate, MatchesUnprunedAtDeskScale) {
  const auto pruned = pruned_generate(6, kSqrt2, kDefault);
  const auto plain = generate_blocks(6, kSqrt2, kDefault, 2);
  EXPECT_TRUE(pruned.bad.empty());
  EXPECT_EQ(pruned.prefix.values(), plain.values());
  ASSERT_EQ(pruned.summaries.size(), 5u);
  for (const auto& s : pruned.summaries) {
    EXPECT_GE(s.ratio, 0.0);
    EXPECT_LE(s.ratio, 1.0);
  }
  EXPECT_TRUE(find_collisions(pruned.prefix.values(), 2).empty());
}

TEST(DoubleHit, SingleHitHelper) {
  const std::vector<std::uint64_t> block = {3, 5, 7};
  EXPECT_TRUE(single_hit(BigInt(9), block));
  EXPECT_FALSE(single_hit(BigInt(15), block));
  EXPECT_TRUE(single_hit(BigInt(2), block));
}

// Every pair collision on the synthetic bases has its largest prime flagged
// by the arithmetic S-set search.
TEST(CrossOracle, CollisionLargestPrimeIsBad) {
  int exercised = 0;
  for (const auto& sc : fixture::synthetic_cases()) {
    const auto run = fixture::run(sc);
    if (run.collisions.empty()) continue;
    ++exercised;
    std::map<int, std::set<std::uint64_t>> bad;
    for (int k1 = run.params.k_min; k1 <= sc.k_max; ++k1) {
      for (const auto& rec : bad_primes(k1, run.params, run.basis, K2Policy::kExhaustive)) {
        bad[k1].insert(rec.p1);
        const auto b = s_bounds_unchecked(rec.k2, k1, run.params, run.basis);
        EXPECT_NE(sgn(rec.s(b)), 0);
      }
    }
    for (const auto& c : run.collisions) {
      const auto& top = c.left.front();
      EXPECT_TRUE(bad[top.k].count(top.p)) << sc.name << " p1 = " << top.p;
    }
  }
  EXPECT_GE(exercised, 5);
}

}  // namespace
}  // namespace sidon
