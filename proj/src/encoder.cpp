#include "sidon/encoder.hpp"

#include <string>

#include "sidon/errors.hpp"

namespace sidon {

std::string DigitVector::big_endian_string() const {
  std::string out;
  for (int j = k(); j >= 1; --j) {
    if (!out.empty()) out += ' ';
    out += std::to_string(at(j));
  }
  return out;
}

DigitExtractor::DigitExtractor(const Basis& basis, int window)
    : basis_(basis), window_(window) {
  if (window < 2) throw Error(Errc::kInvalidArgument, "digit window index must be >= 2");
  if (static_cast<long>(window) * window > basis.scale()) {
    throw Error(Errc::kInvalidArgument, "window " + std::to_string(window) +
                                            " needs basis scale >= " + std::to_string(window * window));
  }
  tables_.reserve(static_cast<std::size_t>(basis.size()));
  for (const auto& e : basis.entries()) tables_.emplace_back(e.g, e.q);
}

DigitVector DigitExtractor::digits(std::uint64_t p, int k) const {
  if (k > basis_.size()) {
    throw Error(Errc::kBasisGap, "block " + std::to_string(k) + " needs " + std::to_string(k) +
                                     " basis entries, have " + std::to_string(basis_.size()));
  }
  DigitVector out;
  out.window = window_;
  out.digits.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    const std::uint64_t q = basis_.q(j);
    if (p % q == 0) {
      throw Error(Errc::kExcludedPrime, std::to_string(p) + " = q_" + std::to_string(j));
    }
    out.digits.push_back(lift_to_window(tables_[static_cast<std::size_t>(j - 1)].log(p % q), q, window_));
  }
  return out;
}

DigitVector digits_of_prime(std::uint64_t p, const Basis& basis, const BlockParams& params, int h) {
  const int k = block_of_prime(p, params);
  return DigitExtractor(basis.extended_to(k), h).digits(p, k);
}

BigInt encode_value(const DigitVector& d, const Basis& basis) {
  if (d.k() > basis.size()) {
    throw Error(Errc::kDigitOutOfRange, "more digits than basis entries");
  }
  BigInt value = 0;
  for (int j = 1; j <= d.k(); ++j) {
    const std::uint64_t x = d.at(j);
    const std::uint64_t q = basis.q(j);
    const bool ok = d.window >= 2
                        ? x >= static_cast<std::uint64_t>(d.window - 1) * q + 1 &&
                              x <= static_cast<std::uint64_t>(d.window) * q - 1 &&
                              static_cast<long>(d.window) * d.window <= basis.scale()
                        : x < basis.radix(j);
    if (!ok) {
      throw Error(Errc::kDigitOutOfRange,
                  "x_" + std::to_string(j) + " = " + std::to_string(x) + " outside its window");
    }
    value += big_from_u64(x) * basis.weight(j);
  }
  return value;
}

DigitVector decode_value(const BigInt& a, const Basis& basis) {
  if (sgn(a) < 0 || a >= basis.weight(basis.size() + 1)) {
    throw Error(Errc::kValueTooLarge, a.get_str() + " does not fit the basis");
  }
  DigitVector out;
  out.window = 0;
  BigInt rest = a;
  for (int j = 1; sgn(rest) > 0; ++j) {
    const BigInt radix = big_from_u64(basis.radix(j));
    BigInt digit = rest % radix;
    rest /= radix;
    out.digits.push_back(big_to_u64(digit));
  }
  return out;
}

}  // namespace sidon
