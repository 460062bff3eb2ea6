#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sidon/basis.hpp"
#include "sidon/bigint.hpp"
#include "sidon/blocks.hpp"
#include "sidon/encoder.hpp"
#include "sidon/generator.hpp"

namespace sidon {

// Two disjoint l-multisets of equal sum, as indices into the audited list.
// Each side is ordered by value, largest first; `left` holds the overall
// largest element.
struct Collision {
  int l = 0;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;

  friend bool operator==(const Collision&, const Collision&) = default;
  friend auto operator<=>(const Collision&, const Collision&) = default;
};

// Every repeated l-sum among distinct values, sides disjoint as sets. Sums of
// l-multisets are produced in sorted order by merging a table of the larger
// half-multisets against the sorted smaller halves (l = 2 is the
// pairwise-sum special case), so memory stays linear in the number of rows.
// Output is sorted by sum, then by (left, right). Throws ArityOutOfRange when
// l < 2, InvalidArgument on repeated values.
std::vector<Collision> find_collisions(std::span<const BigInt> values, int l);

struct StructureFacts {
  bool digitwise_equal = false;
  bool block_indices = false;
  bool congruence_chain = false;
  // (1-c)k_1^2 < k_2^2 < c/(1-c) k_1^2 for Sidon pairs; otherwise
  // k_l^2 < c/(1-c) (k_1^2 + ... + k_(l-1)^2).
  bool inequality = false;
  // q_1 ... q_(k_1) | prod_i (p_1...p_i - p'_1...p'_i)
  bool divisibility = false;
  std::vector<int> k;  // k_1 >= ... >= k_l recovered from the digit sums

  bool all() const {
    return digitwise_equal && block_indices && congruence_chain && inequality && divisibility;
  }
};

struct CollisionReport {
  int l = 0;
  std::vector<SidonElement> left;
  std::vector<SidonElement> right;
  std::optional<StructureFacts> structure;

  BigInt sum() const;
};

std::vector<CollisionReport> find_element_collisions(const std::vector<SidonElement>& elements, int l);

// Throws MissingDigits when an element carries no digit vector and
// DigitOutOfRange when a digit vector does not reproduce its value.
StructureFacts check_collision_structure(const CollisionReport& r, const Basis& basis,
                                         const BlockParams& params, int h);

struct BracketRow {
  int k = 0;
  BigInt x;  // W_(k+1)
  std::uint64_t count = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool bracket_ok = false;
  bool element_bounds_ok = false;  // W_k q_k < a_p < W_(k+1) across block k
  std::optional<double> exponent;

  bool pass() const { return bracket_ok && element_bounds_ok; }
};

std::vector<BracketRow> growth_bracket_check(const SequencePrefix& prefix);

// All sums r_i + r_j (i <= j) distinct mod `modulus`.
bool is_sidon_mod(std::span<const std::uint64_t> residues, std::uint64_t modulus);

bool all_distinct(std::span<const BigInt> values);

}  // namespace sidon
