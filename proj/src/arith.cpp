#include "sidon/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sidon/errors.hpp"

namespace sidon {

namespace {

constexpr std::uint64_t kSegmentSize = 1u << 18;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::vector<std::uint32_t> small_primes_upto(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

// Visits every prime in (lo, hi] in ascending order.
template <typename Visit>
void sieve_interval(std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  if (hi <= lo || hi < 2) return;
  const auto base = small_primes_upto(isqrt(hi));
  std::vector<char> mark(kSegmentSize);
  std::uint64_t start = std::max<std::uint64_t>(lo + 1, 2);
  while (start <= hi) {
    const std::uint64_t end = std::min(hi, start + kSegmentSize - 1);
    std::fill(mark.begin(), mark.begin() + static_cast<std::ptrdiff_t>(end - start + 1), 1);
    for (std::uint32_t p : base) {
      const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
      if (pp > end) break;
      std::uint64_t first = std::max(pp, (start + p - 1) / p * p);
      for (std::uint64_t m = first; m <= end; m += p) mark[m - start] = 0;
    }
    for (std::uint64_t n = start; n <= end; ++n) {
      if (mark[n - start]) visit(n);
    }
    if (end == hi) break;
    start = end + 1;
  }
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    const __int128 quotient = r / new_r;
    t -= quotient * new_t;
    std::swap(t, new_t);
    r -= quotient * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) {
    throw Error(Errc::kInvalidArgument,
                std::to_string(a) + " is not invertible mod " + std::to_string(m));
  }
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve witnesses are proven sufficient below 3.3 * 10^24.
  for (std::uint64_t a : kSmall) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime_above(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> primes_in_interval(PrimeInterval iv) {
  std::vector<std::uint64_t> out;
  sieve_interval(iv.lo, iv.hi, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

std::uint64_t prime_pi(std::uint64_t n) {
  std::uint64_t count = 0;
  sieve_interval(0, n, [&](std::uint64_t) { ++count; });
  return count;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t q) {
  if (g % q == 0) return false;
  const std::uint64_t order = q - 1;
  for (const auto& [r, e] : factorize(order)) {
    if (pow_mod(g, order / r, q) == 1) return false;
  }
  return true;
}

std::uint64_t smallest_primitive_root(std::uint64_t q) {
  if (q < 3 || !is_prime(q)) {
    throw Error(Errc::kInvalidModulus, std::to_string(q) + " is not an odd prime");
  }
  const std::uint64_t order = q - 1;
  const auto factors = factorize(order);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (const auto& [r, e] : factors) {
      if (pow_mod(g, order / r, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(Errc::kInvalidModulus, "no primitive root mod " + std::to_string(q));
}

DiscreteLogTable::DiscreteLogTable(std::uint64_t g, std::uint64_t q)
    : g_(g % q), q_(q), order_(q - 1) {
  if (q < 2 || !is_prime(q)) {
    throw Error(Errc::kInvalidModulus, std::to_string(q) + " is not prime");
  }
  stride_ = isqrt(order_);
  if (stride_ * stride_ < order_) ++stride_;
  baby_.reserve(stride_);
  std::uint64_t cur = 1;
  for (std::uint64_t i = 0; i < stride_; ++i) {
    baby_.emplace_back(cur, i);
    cur = mul_mod(cur, g_, q_);
  }
  std::sort(baby_.begin(), baby_.end());
  // g^-stride = g^(order - stride mod order)
  giant_ = pow_mod(g_, (order_ - stride_ % order_) % order_, q_);
}

std::uint64_t DiscreteLogTable::log(std::uint64_t a) const {
  a %= q_;
  if (a == 0) {
    throw Error(Errc::kDLogUndefined,
                "0 has no logarithm mod " + std::to_string(q_));
  }
  std::uint64_t gamma = a;
  for (std::uint64_t i = 0; i <= stride_; ++i) {
    auto it = std::lower_bound(baby_.begin(), baby_.end(),
                               std::make_pair(gamma, std::uint64_t{0}));
    if (it != baby_.end() && it->first == gamma) {
      return (i * stride_ + it->second) % order_;
    }
    gamma = mul_mod(gamma, giant_, q_);
  }
  throw Error(Errc::kInvalidArgument,
              std::to_string(g_) + " is not a primitive root mod " + std::to_string(q_));
}

std::uint64_t discrete_log(std::uint64_t g, std::uint64_t a, std::uint64_t q) {
  return DiscreteLogTable(g, q).log(a);
}

std::uint64_t lift_to_window(std::uint64_t d, std::uint64_t q, int h) {
  const std::uint64_t modulus = q - 1;
  const std::uint64_t lo = static_cast<std::uint64_t>(h - 1) * q + 1;
  const std::uint64_t offset = (d % modulus + modulus - lo % modulus) % modulus;
  return lo + offset;
}

}  // namespace sidon
