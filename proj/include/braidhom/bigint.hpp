#ifndef BRAIDHOM_BIGINT_HPP
#define BRAIDHOM_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace braidhom {

// Arbitrary-precision signed integer. Coefficients of all complexes are
// exact integers; no modular reduction anywhere.
//
// Sign-magnitude representation, little-endian 32-bit limbs, no leading
// zero limbs, zero has empty magnitude and sign 0.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT(google-explicit-constructor): ℤ embeds

  static BigInt from_string(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool is_one() const;
  bool is_minus_one() const;
  bool odd() const { return !mag_.empty() && (mag_[0] & 1u); }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  bool operator==(const BigInt& o) const {
    return sign_ == o.sign_ && mag_ == o.mag_;
  }
  bool operator!=(const BigInt& o) const { return !(*this == o); }

  std::string to_string() const;

  // Throws DomainError when the value does not fit.
  long long to_ll() const;

 private:
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(
      const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(
      const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
};

}  // namespace braidhom

#endif
