#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sidon/arith.hpp"
#include "sidon/basis.hpp"
#include "sidon/bigint.hpp"
#include "sidon/blocks.hpp"

namespace sidon {

// Mixed-radix digits, little-endian (digits[0] is x_1). window >= 2 means
// every digit lies in [(window-1)q_j + 1, window*q_j - 1]; window == 0 marks a
// plain decoded string with 0 <= x_j < m*q_j.
struct DigitVector {
  std::vector<std::uint64_t> digits;
  int window = 2;

  int k() const { return static_cast<int>(digits.size()); }
  std::uint64_t at(int j) const {
    return j >= 1 && j <= k() ? digits[static_cast<std::size_t>(j - 1)] : 0;
  }
  // "x_k ... x_1"
  std::string big_endian_string() const;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

struct SidonElement {
  std::uint64_t p = 0;
  int k = 0;
  DigitVector digits;
  BigInt value;
};

// Per-basis discrete-log tables shared by every prime of a run.
class DigitExtractor {
 public:
  DigitExtractor(const Basis& basis, int window);

  // Digits x_1..x_k of p. Throws ExcludedPrime when p = q_j for some j <= k.
  DigitVector digits(std::uint64_t p, int k) const;

  const Basis& basis() const { return basis_; }
  int window() const { return window_; }

 private:
  Basis basis_;
  int window_;
  std::vector<DiscreteLogTable> tables_;  // tables_[j-1] for q_j
};

DigitVector digits_of_prime(std::uint64_t p, const Basis& basis, const BlockParams& params, int h);

// Throws DigitOutOfRange if a digit leaves its window (or its radix when
// d.window == 0), or the basis is too short.
BigInt encode_value(const DigitVector& d, const Basis& basis);

// Throws ValueTooLarge unless 0 <= a < W_(J+1).
DigitVector decode_value(const BigInt& a, const Basis& basis);

}  // namespace sidon
