#include "sidon/basis.hpp"

#include <random>
#include <string>

#include "sidon/arith.hpp"
#include "sidon/errors.hpp"

namespace sidon {

namespace {

void check_scale(int scale) {
  int root = 2;
  while (root * root < scale) ++root;
  if (scale < 4 || root * root != scale) {
    throw Error(Errc::kInvalidArgument,
                "scale must be the square of an integer >= 2, got " + std::to_string(scale));
  }
}

std::uint64_t interval_lo(int j) { return std::uint64_t{1} << (2 * j - 1); }
std::uint64_t interval_hi(int j) { return std::uint64_t{1} << (2 * j + 1); }

// Uniform draw in [0, bound) from raw 64-bit engine output. Kept explicit so
// the sequence does not depend on the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return r % bound;
  }
}

std::uint64_t pick_prime(BasisSource source, int j) {
  const std::uint64_t lo = interval_lo(j);
  const std::uint64_t hi = interval_hi(j);
  if (source.mode == BasisMode::kDeterministic) {
    const std::uint64_t p = next_prime_above(lo);
    if (p > hi) throw Error(Errc::kBasisGap, "no prime in interval j=" + std::to_string(j));
    return p;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(source.seed),
                    static_cast<std::uint32_t>(source.seed >> 32),
                    static_cast<std::uint32_t>(j)};
  std::mt19937_64 rng(seq);
  // Rejection sampling: uniform over the integers of (lo, hi], keep primes,
  // which is uniform over the primes of the interval.
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    const std::uint64_t candidate = lo + 1 + uniform_below(rng, hi - lo);
    if (is_prime(candidate)) return candidate;
  }
  throw Error(Errc::kBasisGap, "no prime drawn in interval j=" + std::to_string(j));
}

}  // namespace

bool in_dyadic_interval(int j, std::uint64_t q) {
  return j >= 1 && j <= 31 && q > interval_lo(j) && q <= interval_hi(j);
}

Basis Basis::build(BasisSource source, int scale, int count) {
  check_scale(scale);
  if (count < 1) throw Error(Errc::kInvalidArgument, "basis count must be >= 1");
  Basis b;
  b.scale_ = scale;
  b.source_ = source;
  b.weights_.push_back(1);
  return b.extended_to(count);
}

Basis Basis::from_entries(int scale, std::vector<BasisEntry> entries) {
  check_scale(scale);
  Basis b;
  b.scale_ = scale;
  b.synthetic_ = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto& e = entries[i];
    e.j = static_cast<int>(i) + 1;
    if (e.q < 3 || !is_prime(e.q)) {
      throw Error(Errc::kInvalidModulus, std::to_string(e.q) + " is not an odd prime");
    }
    if (!is_primitive_root(e.g, e.q)) {
      throw Error(Errc::kInvalidArgument,
                  std::to_string(e.g) + " is not a primitive root mod " + std::to_string(e.q));
    }
    for (std::size_t t = 0; t < i; ++t) {
      if (entries[t].q == e.q) {
        throw Error(Errc::kInvalidModulus, "basis prime " + std::to_string(e.q) + " repeats");
      }
    }
  }
  b.entries_ = std::move(entries);
  b.compute_weights();
  return b;
}

Basis Basis::extended_to(int count) const {
  if (count <= size()) return *this;
  if (synthetic_) {
    throw Error(Errc::kBasisGap, "synthetic basis has only " + std::to_string(size()) +
                                     " entries, " + std::to_string(count) + " needed");
  }
  if (count > 31) throw Error(Errc::kValueTooLarge, "basis length limited to 31 entries");
  Basis b = *this;
  for (int j = size() + 1; j <= count; ++j) {
    const std::uint64_t q = pick_prime(source_, j);
    b.entries_.push_back({j, q, smallest_primitive_root(q)});
  }
  b.compute_weights();
  return b;
}

void Basis::compute_weights() {
  weights_.assign(1, BigInt(1));
  for (const auto& e : entries_) {
    weights_.push_back(weights_.back() * big_from_u64(static_cast<std::uint64_t>(scale_) * e.q));
  }
}

const BigInt& Basis::weight(int j) const {
  if (j < 1 || j > size() + 1) {
    throw Error(Errc::kBasisGap, "radix weight W_" + std::to_string(j) + " needs a longer basis");
  }
  return weights_[static_cast<std::size_t>(j - 1)];
}

BigInt Basis::modulus_product(int a, int b) const {
  BigInt out = 1;
  for (int j = a; j <= b; ++j) out *= big_from_u64(q(j));
  return out;
}

bool operator==(const Basis& a, const Basis& b) {
  if (a.scale_ != b.scale_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].q != b.entries_[i].q || a.entries_[i].g != b.entries_[i].g) return false;
  }
  return true;
}

Basis build_basis(BasisSource source, int scale, int count) {
  return Basis::build(source, scale, count);
}

BigInt radix_weight(const Basis& basis, int j) { return basis.weight(j); }

}  // namespace sidon
