#include "sidon/real.hpp"

#include <algorithm>
#include <vector>

#include "sidon/errors.hpp"

namespace sidon {

namespace {

long max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidModulus: return "InvalidModulus";
    case Errc::kDLogUndefined: return "DLogUndefined";
    case Errc::kBasisGap: return "BasisGap";
    case Errc::kPrecisionAmbiguity: return "PrecisionAmbiguity";
    case Errc::kExcludedPrime: return "ExcludedPrime";
    case Errc::kDigitOutOfRange: return "DigitOutOfRange";
    case Errc::kValueTooLarge: return "ValueTooLarge";
    case Errc::kPrefixTooShort: return "PrefixTooShort";
    case Errc::kIneligiblePair: return "IneligiblePair";
    case Errc::kArityOutOfRange: return "ArityOutOfRange";
    case Errc::kMissingDigits: return "MissingDigits";
    case Errc::kDegreeTooLarge: return "DegreeTooLarge";
    case Errc::kNotIrreducible: return "NotIrreducible";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

BigInt big_from_string(const std::string& s) {
  BigInt r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw Error(Errc::kInvalidArgument, "not a decimal integer: '" + s + "'");
  }
  return r;
}

Real::Real(long precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, long precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const BigInt& value, long precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, long precision_bits) {
  mpfr_init2(value_, precision_bits);
  char* end = nullptr;
  mpfr_strtofr(value_, decimal.c_str(), &end, 10, MPFR_RNDN);
  if (decimal.empty() || end == nullptr || *end != '\0') {
    mpfr_clear(value_);
    throw Error(Errc::kInvalidArgument, "not a decimal number: '" + decimal + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return std::string(buf.data());
}

Real operator+(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real log2(const Real& x) {
  Real r(x.precision());
  mpfr_log2(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real exp2(const Real& x) {
  Real r(x.precision());
  mpfr_exp2(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigInt floor_to_int(const Real& x) {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), x.raw(), MPFR_RNDD);
  return out;
}

Real power_of_two(long exponent, long precision_bits) {
  Real r(1, precision_bits);
  mpfr_mul_2si(r.raw(), r.raw(), exponent, MPFR_RNDN);
  return r;
}

}  // namespace sidon
