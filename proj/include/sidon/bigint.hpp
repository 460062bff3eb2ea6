#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sidon {

using BigInt = mpz_class;

inline BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

// Precondition: 0 <= v < 2^64.
inline std::uint64_t big_to_u64(const BigInt& v) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline bool big_fits_u64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::string big_to_string(const BigInt& v) { return v.get_str(10); }

BigInt big_from_string(const std::string& s);

}  // namespace sidon
