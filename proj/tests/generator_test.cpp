#include "sidon/generator.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sidon/arith.hpp"
#include "sidon/errors.hpp"

namespace sidon {
namespace {

const BlockParams kSqrt5 = BlockParams::sidon(GrowthConstant::three_minus_sqrt5_over_2());
const Basis kDefault = build_basis(BasisSource::deterministic(), 4, 4);

TEST(GenerateBlocks, FirstBlocks) {
  const auto prefix = generate_blocks(4, kSqrt5, kDefault, 2);
  ASSERT_EQ(prefix.elements.size(), 3u);
  std::set<std::uint64_t> ps;
  for (const auto& e : prefix.elements) ps.insert(e.p);
  EXPECT_EQ(ps, (std::set<std::uint64_t>{2, 5, 7}));
  ASSERT_EQ(prefix.excluded.size(), 1u);
  EXPECT_EQ(prefix.excluded[0].p, 3u);
  EXPECT_EQ(prefix.excluded[0].j, 1);
  ASSERT_EQ(prefix.blocks.size(), 3u);  // k = 2, 3, 4
  EXPECT_EQ(prefix.blocks[2].block_size, 4u);
  EXPECT_EQ(prefix.blocks[2].emitted, 3u);

  EXPECT_TRUE(generate_blocks(3, kSqrt5, kDefault, 2).elements.empty());
}

TEST(GenerateBlocks, SortedAndBlockOrdered) {
  for (auto params : {kSqrt5, BlockParams::sidon(GrowthConstant::sqrt2_minus_1())}) {
    const auto prefix = generate_blocks(6, params, kDefault, 2);
    for (std::size_t i = 1; i < prefix.elements.size(); ++i) {
      const auto& a = prefix.elements[i - 1];
      const auto& b = prefix.elements[i];
      EXPECT_LE(a.k, b.k);
      EXPECT_LT(a.value, b.value);
    }
    // Every prime of the covered range is either emitted or excluded.
    const auto all = oracle::primes_trial(0, block_upper_edge(6, params));
    EXPECT_EQ(prefix.elements.size() + prefix.excluded.size(), all.size());
  }
}

TEST(GenerateBlocks, Deterministic) {
  const auto a = generate_blocks(6, kSqrt5, kDefault, 2);
  const auto b = generate_blocks(6, kSqrt5, kDefault, 2);
  EXPECT_EQ(a.values(), b.values());
}

TEST(FiniteDlogSidonSet, Examples) {
  const auto s101 = finite_dlog_sidon_set(101, 2);
  ASSERT_EQ(s101.size(), 4u);
  EXPECT_EQ(s101[0], 1u);
  const std::uint64_t ps[] = {2, 3, 5, 7};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(s101[static_cast<std::size_t>(i)], oracle::brute_log(2, ps[i], 101));

  EXPECT_EQ(finite_dlog_sidon_set(1009, smallest_primitive_root(1009)).size(), 11u);
  EXPECT_EQ(finite_dlog_sidon_set(10007, smallest_primitive_root(10007)).size(), 25u);
  EXPECT_THROW(finite_dlog_sidon_set(101, 5), Error);  // 5 has order 25
}

// Sums with repetition, all distinct mod q - 1: checked by explicit pair list.
bool sidon_brute(const std::vector<std::uint64_t>& s, std::uint64_t m) {
  std::set<std::uint64_t> sums;
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j, ++n) sums.insert((s[i] + s[j]) % m);
  }
  return sums.size() == n;
}

TEST(FiniteDlogSidonSet, SidonForManyPrimes) {
  for (std::uint64_t q : oracle::primes_trial(50, 3000)) {
    const auto s = finite_dlog_sidon_set(q, smallest_primitive_root(q));
    ASSERT_TRUE(sidon_brute(s, q - 1)) << q;
    // the underlying mechanism: products of two small primes stay below q
    std::uint64_t r = 1;
    while ((r + 1) * (r + 1) <= q) ++r;
    EXPECT_EQ(s.size(), oracle::primes_trial(0, r).size());
  }
}

TEST(CountUpto, Examples) {
  const auto prefix = generate_blocks(4, kSqrt5, kDefault, 2);
  EXPECT_EQ(count_upto(BigInt(0), prefix).count, 0u);
  const BigInt w5 = prefix.basis.weight(5);
  EXPECT_EQ(w5, BigInt(78144) * 524);
  const auto r = count_upto(w5, prefix);
  EXPECT_EQ(r.count, 3u);
  EXPECT_EQ(r.k, 4);
  EXPECT_EQ(r.lower, 3u);
  EXPECT_EQ(r.upper, static_cast<std::uint64_t>(oracle::primes_trial(0, block_upper_edge(6, kSqrt5)).size()));
  EXPECT_TRUE(r.bracket_ok);
  ASSERT_TRUE(r.exponent.has_value());

  EXPECT_THROW(count_upto(w5 * 10000, prefix), Error);
}

TEST(CountUpto, BracketsAtEveryWeight) {
  const auto prefix = generate_blocks(6, kSqrt5, kDefault, 2);
  for (int k = 1; k <= 6; ++k) {
    const auto r = count_upto(prefix.basis.weight(k + 1), prefix);
    std::uint64_t direct = 0;
    for (const auto& e : prefix.elements) direct += e.value <= prefix.basis.weight(k + 1);
    EXPECT_EQ(r.count, direct);
    EXPECT_TRUE(r.bracket_ok) << k;
  }
}

}  // namespace
}  // namespace sidon
