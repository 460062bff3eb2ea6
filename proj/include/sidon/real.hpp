#pragma once

#include <mpfr.h>

#include <string>

#include "sidon/bigint.hpp"

namespace sidon {

// Owning wrapper around an MPFR value with an explicit precision in bits.
// Binary operations round to the larger operand precision.
class Real {
 public:
  explicit Real(long precision_bits);
  Real(long value, long precision_bits);
  Real(const BigInt& value, long precision_bits);
  Real(const std::string& decimal, long precision_bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }
  std::string to_string(int digits = 30) const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

 private:
  mpfr_t value_;
};

Real sqrt(const Real& x);
Real log(const Real& x);  // natural
Real log2(const Real& x);
Real exp2(const Real& x);
Real abs(const Real& x);

// Largest integer <= x.
BigInt floor_to_int(const Real& x);

// 2^-bits at the given precision.
Real power_of_two(long exponent, long precision_bits);

}  // namespace sidon
