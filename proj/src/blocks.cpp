#include "sidon/blocks.hpp"

#include <string>

#include "sidon/arith.hpp"
#include "sidon/errors.hpp"

namespace sidon {

namespace {

void check_k(int k, const BlockParams& params) {
  if (k < params.k_min - 1) {
    throw Error(Errc::kInvalidArgument, "block index " + std::to_string(k) +
                                            " below k_min - 1 = " + std::to_string(params.k_min - 1));
  }
}

bool within_guard(const Real& a, const Real& b, long precision) {
  return abs(a - b) < power_of_two(-kGuardBits, precision);
}

}  // namespace

GrowthConstant GrowthConstant::bh(int h) {
  if (h < 2) throw Error(Errc::kInvalidArgument, "B_h needs h >= 2");
  GrowthConstant c(Kind::kBh);
  c.h_ = h;
  return c;
}

GrowthConstant GrowthConstant::custom(const std::string& decimal) {
  GrowthConstant c(Kind::kCustom);
  c.decimal_ = decimal;
  c.value(kDefaultPrecisionBits);  // validates
  return c;
}

GrowthConstant GrowthConstant::parse(const std::string& selector) {
  if (selector == "sqrt5") return three_minus_sqrt5_over_2();
  if (selector == "sqrt2") return sqrt2_minus_1();
  if (selector.rfind("bh:", 0) == 0) {
    const std::string tail = selector.substr(3);
    std::size_t used = 0;
    int h = 0;
    try {
      h = std::stoi(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tail.size()) {
      throw Error(Errc::kInvalidArgument, "bad B_h selector '" + selector + "'");
    }
    return bh(h);
  }
  if (selector.rfind("custom:", 0) == 0) return custom(selector.substr(7));
  return custom(selector);
}

std::string GrowthConstant::selector() const {
  switch (kind_) {
    case Kind::kThreeMinusSqrt5Over2: return "sqrt5";
    case Kind::kSqrt2Minus1: return "sqrt2";
    case Kind::kBh: return "bh:" + std::to_string(h_);
    case Kind::kCustom: return "custom:" + decimal_;
  }
  return "";
}

Real GrowthConstant::value(long precision_bits) const {
  Real c(precision_bits);
  switch (kind_) {
    case Kind::kThreeMinusSqrt5Over2:
      c = (Real(3, precision_bits) - sqrt(Real(5, precision_bits))) / Real(2, precision_bits);
      break;
    case Kind::kSqrt2Minus1:
      c = sqrt(Real(2, precision_bits)) - Real(1, precision_bits);
      break;
    case Kind::kBh: {
      const Real hm1(h_ - 1, precision_bits);
      c = sqrt(hm1 * hm1 + Real(1, precision_bits)) - hm1;
      break;
    }
    case Kind::kCustom:
      c = Real(decimal_, precision_bits);
      break;
  }
  if (c.sign() <= 0 || !(c < Real(1, precision_bits) / Real(2, precision_bits))) {
    throw Error(Errc::kInvalidArgument, "c must lie in (0, 1/2), got " + c.to_string(20));
  }
  return c;
}

BlockParams BlockParams::sidon(GrowthConstant c, long precision_bits) {
  BlockParams p;
  p.c = c;
  p.offset = -3;
  p.taper = false;
  p.k_min = 2;
  p.precision_bits = precision_bits;
  return p;
}

BlockParams BlockParams::tapered(GrowthConstant c, long precision_bits) {
  BlockParams p;
  p.c = c;
  p.offset = 0;
  p.taper = true;
  p.k_min = 3;
  p.precision_bits = precision_bits;
  return p;
}

static Real taper_factor(int k, const BlockParams& params) {
  const long prec = params.working_precision();
  Real lg = log(Real(k, prec));
  if (params.taper_log == TaperLog::kBinary) lg = log2(Real(k, prec));
  return Real(1, prec) - Real(1, prec) / sqrt(lg);
}

Real block_exponent(int k, const BlockParams& params) {
  if (params.precision_bits < kMinPrecisionBits) {
    throw Error(Errc::kInvalidArgument, "precision must be at least 96 bits");
  }
  check_k(k, params);
  const long prec = params.working_precision();
  Real e = params.c.value(prec) * Real(static_cast<long>(k) * k, prec);
  if (params.taper) {
    if (k < 2) throw Error(Errc::kInvalidArgument, "tapered blocks need k >= 2");
    e = e * taper_factor(k, params);
  }
  return e + Real(params.offset, prec);
}

bool taper_negative(int k, const BlockParams& params) {
  return params.taper && k >= 2 && taper_factor(k, params).sign() < 0;
}

std::uint64_t block_upper_edge(int k, const BlockParams& params) {
  const long prec = params.working_precision();
  const Real e = block_exponent(k, params);
  if (e.sign() < 0) {
    if (within_guard(e, Real(prec), prec)) {
      throw Error(Errc::kPrecisionAmbiguity, "E(" + std::to_string(k) + ") is too close to 0");
    }
    return 0;
  }
  if (!(e < Real(62, prec))) {
    throw Error(Errc::kValueTooLarge, "block " + std::to_string(k) + " exceeds 62-bit primes");
  }
  const BigInt n = floor_to_int(exp2(e));
  // floor(2^E) = n requires log2(n) <= E < log2(n + 1) with room to spare.
  if (within_guard(log2(Real(n + 1, prec)), e, prec) ||
      (n > 0 && within_guard(log2(Real(n, prec)), e, prec))) {
    throw Error(Errc::kPrecisionAmbiguity,
                "2^E(" + std::to_string(k) + ") is within 2^-64 of an integer");
  }
  return big_to_u64(n);
}

std::int64_t block_exponent_floor(int k, const BlockParams& params) {
  const long prec = params.working_precision();
  const Real e = block_exponent(k, params);
  const BigInt n = floor_to_int(e);
  if (within_guard(Real(n, prec), e, prec) || within_guard(Real(n + 1, prec), e, prec)) {
    throw Error(Errc::kPrecisionAmbiguity,
                "E(" + std::to_string(k) + ") is within 2^-64 of an integer");
  }
  return n.get_si();
}

int block_of_prime(std::uint64_t p, const BlockParams& params) {
  if (p < 2) throw Error(Errc::kInvalidArgument, "block_of_prime needs p >= 2");
  const long prec = params.working_precision();
  const Real log_p = log2(Real(big_from_u64(p), prec));
  if (block_upper_edge(params.k_min - 1, params) >= p) {
    throw Error(Errc::kInvalidArgument,
                std::to_string(p) + " lies below the first block edge");
  }
  for (int k = params.k_min;; ++k) {
    const Real e = block_exponent(k, params);
    if (within_guard(log_p, e, prec)) {
      throw Error(Errc::kPrecisionAmbiguity,
                  "log2 " + std::to_string(p) + " is within 2^-64 of E(" + std::to_string(k) + ")");
    }
    if (log_p < e) return k;
  }
}

std::vector<std::uint64_t> primes_in_block(int k, const BlockParams& params) {
  if (k < params.k_min) {
    throw Error(Errc::kInvalidArgument, "block index below k_min");
  }
  const std::uint64_t lo = block_upper_edge(k - 1, params);
  const std::uint64_t hi = block_upper_edge(k, params);
  if (hi <= lo) return {};
  return primes_in_interval({lo, hi});
}

}  // namespace sidon
