#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sidon/real.hpp"

namespace sidon {

constexpr long kDefaultPrecisionBits = 128;
constexpr long kMinPrecisionBits = 96;
// Distances below 2^-kGuardBits between log2 p and a block edge are refused.
constexpr long kGuardBits = 64;

// The exponent constant c, named symbolically and re-evaluated at whatever
// precision is requested.
class GrowthConstant {
 public:
  enum class Kind { kThreeMinusSqrt5Over2, kSqrt2Minus1, kBh, kCustom };

  static GrowthConstant three_minus_sqrt5_over_2() { return GrowthConstant(Kind::kThreeMinusSqrt5Over2); }
  static GrowthConstant sqrt2_minus_1() { return GrowthConstant(Kind::kSqrt2Minus1); }
  // sqrt((h-1)^2 + 1) - (h - 1)
  static GrowthConstant bh(int h);
  static GrowthConstant custom(const std::string& decimal);

  // "sqrt5", "sqrt2", "bh:<h>" or a decimal string in (0, 1/2).
  static GrowthConstant parse(const std::string& selector);

  Kind kind() const { return kind_; }
  int h() const { return h_; }
  std::string selector() const;

  // Throws InvalidArgument unless 0 < c < 1/2.
  Real value(long precision_bits) const;

 private:
  explicit GrowthConstant(Kind kind) : kind_(kind) {}

  Kind kind_;
  int h_ = 0;
  std::string decimal_;
};

enum class TaperLog { kNatural, kBinary };

// E(k) = c k^2 (1 - 1/sqrt(log k))^[taper] + offset;
// P_k = { p prime : 2^E(k-1) < p <= 2^E(k) }, k >= k_min.
struct BlockParams {
  GrowthConstant c = GrowthConstant::three_minus_sqrt5_over_2();
  int offset = -3;
  bool taper = false;
  TaperLog taper_log = TaperLog::kNatural;
  int k_min = 2;
  long precision_bits = kDefaultPrecisionBits;  // fractional bits

  static BlockParams sidon(GrowthConstant c, long precision_bits = kDefaultPrecisionBits);
  static BlockParams tapered(GrowthConstant c, long precision_bits = kDefaultPrecisionBits);

  long working_precision() const { return precision_bits + 64; }
};

Real block_exponent(int k, const BlockParams& params);

// True when the taper factor 1 - 1/sqrt(log k) is negative.
bool taper_negative(int k, const BlockParams& params);

// floor(2^E(k)); 0 when E(k) < 0. Throws PrecisionAmbiguity when 2^E(k) lies
// within the guard band of an integer.
std::uint64_t block_upper_edge(int k, const BlockParams& params);

// floor(E(k)), used for degree-indexed blocks over GF(2)[X].
std::int64_t block_exponent_floor(int k, const BlockParams& params);

int block_of_prime(std::uint64_t p, const BlockParams& params);

std::vector<std::uint64_t> primes_in_block(int k, const BlockParams& params);

}  // namespace sidon
