#include "sidon/gf2x.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sidon/arith.hpp"
#include "sidon/errors.hpp"

namespace sidon {

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// X^(2^times) mod f by repeated squaring.
Gf2Poly frobenius(Gf2Poly f, int times) {
  Gf2Poly r = gf2_mod(Gf2Poly::x(), f);
  for (int i = 0; i < times; ++i) r = gf2_mulmod(r, r, f);
  return r;
}

}  // namespace

Gf2Poly Gf2Poly::from_hex(const std::string& hex) {
  if (hex.empty() || hex.size() > 16) {
    throw Error(Errc::kInvalidArgument, "bad polynomial hex '" + hex + "'");
  }
  std::uint64_t bits = 0;
  for (char ch : hex) {
    int v = 0;
    if (ch >= '0' && ch <= '9') {
      v = ch - '0';
    } else if (ch >= 'a' && ch <= 'f') {
      v = ch - 'a' + 10;
    } else if (ch >= 'A' && ch <= 'F') {
      v = ch - 'A' + 10;
    } else {
      throw Error(Errc::kInvalidArgument, "bad polynomial hex '" + hex + "'");
    }
    bits = (bits << 4) | static_cast<std::uint64_t>(v);
  }
  return Gf2Poly(bits);
}

int Gf2Poly::degree() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

std::string Gf2Poly::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  if (bits_ == 0) return "0";
  std::string out;
  for (std::uint64_t b = bits_; b != 0; b >>= 4) out.push_back(kDigits[b & 0xf]);
  std::reverse(out.begin(), out.end());
  return out;
}

std::string Gf2Poly::to_string() const {
  if (bits_ == 0) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (((bits_ >> i) & 1) == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'X';
    } else {
      out += "X^" + std::to_string(i);
    }
  }
  return out;
}

Gf2Poly clmul(Gf2Poly a, Gf2Poly b) {
  if (a.degree() + b.degree() >= 64) {
    throw Error(Errc::kDegreeTooLarge, "product degree exceeds 63");
  }
  std::uint64_t r = 0;
  std::uint64_t x = a.bits();
  for (std::uint64_t y = b.bits(); y != 0; y >>= 1, x <<= 1) {
    if (y & 1) r ^= x;
  }
  return Gf2Poly(r);
}

Gf2Poly gf2_mod(Gf2Poly a, Gf2Poly m) {
  const int dm = m.degree();
  if (dm < 0) throw Error(Errc::kInvalidArgument, "reduction by the zero polynomial");
  std::uint64_t r = a.bits();
  for (int d = a.degree(); d >= dm; --d) {
    if ((r >> d) & 1) r ^= m.bits() << (d - dm);
  }
  return Gf2Poly(r);
}

Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    const Gf2Poly t = gf2_mod(a, b);
    a = b;
    b = t;
  }
  return a;
}

Gf2Poly gf2_mulmod(Gf2Poly a, Gf2Poly b, Gf2Poly m) {
  const int dm = m.degree();
  if (dm > 32) throw Error(Errc::kDegreeTooLarge, "modulus degree limited to 32");
  return gf2_mod(clmul(gf2_mod(a, m), gf2_mod(b, m)), m);
}

Gf2Poly gf2_powmod(Gf2Poly base, std::uint64_t exp, Gf2Poly m) {
  Gf2Poly result = gf2_mod(Gf2Poly::one(), m);
  base = gf2_mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = gf2_mulmod(result, base, m);
    base = gf2_mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_irreducible(Gf2Poly f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  if (frobenius(f, d) != Gf2Poly::x()) return false;
  for (const auto& [r, e] : factorize(static_cast<std::uint64_t>(d))) {
    const Gf2Poly t = frobenius(f, d / static_cast<int>(r)) + Gf2Poly::x();
    if (gf2_gcd(f, t).degree() != 0) return false;
  }
  return true;
}

bool is_irreducible_by_trial_division(Gf2Poly f) {
  const int d = f.degree();
  if (d < 1) return false;
  for (int e = 1; 2 * e <= d; ++e) {
    const std::uint64_t top = std::uint64_t{1} << e;
    for (std::uint64_t low = 0; low < top; ++low) {
      if (gf2_mod(f, Gf2Poly(top | low)).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Gf2Poly> irreducibles_of_degree(int d) {
  if (d < 1) throw Error(Errc::kInvalidArgument, "degree must be >= 1");
  if (d > kMaxIrreducibleDegree) {
    throw Error(Errc::kDegreeTooLarge, "degree " + std::to_string(d) + " exceeds " +
                                           std::to_string(kMaxIrreducibleDegree));
  }
  std::vector<Gf2Poly> out;
  const std::uint64_t top = std::uint64_t{1} << d;
  for (std::uint64_t low = 0; low < top; ++low) {
    // Beyond degree 1, an irreducible has constant term 1.
    if (d > 1 && (low & 1) == 0) continue;
    const Gf2Poly f(top | low);
    if (is_irreducible(f)) out.push_back(f);
  }
  return out;
}

std::uint64_t irreducible_count(int d) {
  std::int64_t total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e == 0) total += mobius(e) * (std::int64_t{1} << (d / e));
  }
  return static_cast<std::uint64_t>(total / d);
}

bool gf2_is_generator(Gf2Poly g, Gf2Poly q) {
  const int n = q.degree();
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  g = gf2_mod(g, q);
  if (g.is_zero()) return false;
  for (const auto& [r, e] : factorize(order)) {
    if (gf2_powmod(g, order / r, q) == Gf2Poly::one()) return false;
  }
  return true;
}

Gf2Poly gf2_generator(Gf2Poly q) {
  if (!is_irreducible(q)) throw Error(Errc::kNotIrreducible, q.to_string() + " is reducible");
  const int n = q.degree();
  if (n > 32) throw Error(Errc::kDegreeTooLarge, "generator search limited to degree 32");
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    if (gf2_is_generator(Gf2Poly(bits), q)) return Gf2Poly(bits);
  }
  throw Error(Errc::kNotIrreducible, "no generator mod " + q.to_string());
}

std::uint64_t gf2_discrete_log(Gf2Poly g, Gf2Poly a, Gf2Poly q) {
  const int n = q.degree();
  if (n < 1) throw Error(Errc::kInvalidArgument, "modulus must have degree >= 1");
  a = gf2_mod(a, q);
  if (a.is_zero()) throw Error(Errc::kDLogUndefined, "0 has no logarithm mod " + q.to_string());
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  std::uint64_t stride = 1;
  while (stride * stride < order) ++stride;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> baby;
  baby.reserve(stride);
  Gf2Poly cur = gf2_mod(Gf2Poly::one(), q);
  g = gf2_mod(g, q);
  for (std::uint64_t i = 0; i < stride; ++i) {
    baby.emplace_back(cur.bits(), i);
    cur = gf2_mulmod(cur, g, q);
  }
  std::sort(baby.begin(), baby.end());
  const Gf2Poly giant = gf2_powmod(g, (order - stride % order) % order, q);
  Gf2Poly gamma = a;
  for (std::uint64_t i = 0; i <= stride; ++i) {
    auto it = std::lower_bound(baby.begin(), baby.end(), std::make_pair(gamma.bits(), std::uint64_t{0}));
    if (it != baby.end() && it->first == gamma.bits()) return (i * stride + it->second) % order;
    gamma = gf2_mulmod(gamma, giant, q);
  }
  throw Error(Errc::kInvalidArgument, g.to_string() + " does not generate mod " + q.to_string());
}

std::vector<std::uint64_t> gf2_finite_sidon(int n, Gf2Poly q) {
  if (n < 3 || q.degree() != n) {
    throw Error(Errc::kInvalidArgument, "need n >= 3 and deg q = n");
  }
  const Gf2Poly g = gf2_generator(q);
  std::vector<std::uint64_t> out;
  for (int d = 1; 2 * d < n; ++d) {
    for (const Gf2Poly& p : irreducibles_of_degree(d)) out.push_back(gf2_discrete_log(g, p, q));
  }
  return out;
}

Gf2Basis Gf2Basis::deterministic(int count) {
  if (count < 1) throw Error(Errc::kInvalidArgument, "basis count must be >= 1");
  Gf2Basis b;
  for (int j = 1; j <= count; ++j) {
    const int d = 2 * j - 1;
    if (d > 31) throw Error(Errc::kDegreeTooLarge, "GF(2)[X] basis limited to degree 31");
    Gf2Poly q;
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << d); ++low) {
      const Gf2Poly f((std::uint64_t{1} << d) | low);
      if (is_irreducible(f)) {
        q = f;
        break;
      }
    }
    b.entries_.push_back({j, q, gf2_generator(q)});
  }
  return b;
}

BigInt Gf2Basis::weight(int j) {
  BigInt w = 1;
  mpz_mul_2exp(w.get_mpz_t(), w.get_mpz_t(), static_cast<mp_bitcnt_t>(j * j - 1));
  return w;
}

std::uint64_t gf2_lift_to_window(std::uint64_t d, int j) {
  const std::uint64_t modulus = (std::uint64_t{1} << (2 * j - 1)) - 1;
  const std::uint64_t lo = Gf2Basis::window_lo(j);
  return lo + (d % modulus + modulus - lo % modulus) % modulus;
}

std::vector<BigInt> Gf2Prefix::values() const {
  std::vector<BigInt> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.value);
  return out;
}

std::pair<int, int> gf2_block_degrees(int k, const BlockParams& params) {
  BlockParams plain = params;
  plain.offset = 0;
  plain.taper = false;
  const auto lo = block_exponent_floor(k - 1, plain);
  const auto hi = block_exponent_floor(k, plain);
  return {static_cast<int>(lo) + 1, static_cast<int>(hi)};
}

Gf2Prefix gf2_generate_blocks(int k_max, const BlockParams& params, const Gf2Basis& basis) {
  if (basis.size() < k_max) {
    throw Error(Errc::kBasisGap, "GF(2)[X] basis needs " + std::to_string(k_max) + " entries");
  }
  Gf2Prefix prefix;
  prefix.k_max = k_max;
  for (int k = params.k_min; k <= k_max; ++k) {
    const auto [d_lo, d_hi] = gf2_block_degrees(k, params);
    std::vector<Gf2Poly> block;
    for (int d = std::max(d_lo, 1); d <= d_hi; ++d) {
      const auto irr = irreducibles_of_degree(d);
      block.insert(block.end(), irr.begin(), irr.end());
    }
    std::vector<Gf2Element> elements;
    for (const Gf2Poly& p : block) {
      int hit = 0;
      for (int j = 1; j <= k; ++j) {
        if (basis.entry(j).q == p) hit = j;
      }
      if (hit != 0) {
        prefix.excluded.push_back({p, k, hit});
        continue;
      }
      Gf2Element e;
      e.p = p;
      e.k = k;
      e.value = 0;
      for (int j = 1; j <= k; ++j) {
        const auto& be = basis.entry(j);
        const std::uint64_t x = gf2_lift_to_window(gf2_discrete_log(be.g, p, be.q), j);
        e.digits.push_back(x);
        e.value += big_from_u64(x) * Gf2Basis::weight(j);
      }
      elements.push_back(std::move(e));
    }
    std::sort(elements.begin(), elements.end(),
              [](const Gf2Element& a, const Gf2Element& b) { return a.value < b.value; });
    prefix.elements.insert(prefix.elements.end(), elements.begin(), elements.end());
    prefix.blocks.push_back(std::move(block));
  }
  return prefix;
}

}  // namespace sidon
