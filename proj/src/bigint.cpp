#include "braidhom/bigint.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidhom/errors.hpp"

namespace braidhom {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Avoid overflow on LLONG_MIN by working in unsigned space.
  unsigned long long u =
      v < 0 ? ~static_cast<unsigned long long>(v) + 1ull : static_cast<unsigned long long>(v);
  while (u) {
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffull));
    u >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
bool BigInt::is_minus_one() const { return sign_ == -1 && mag_.size() == 1 && mag_[0] == 1; }

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back(static_cast<std::uint32_t>(s & 0xffffffffull));
    carry = s >> 32;
  }
  if (carry) r.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += (1ll << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.push_back(static_cast<std::uint32_t>(d));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) return *this = o;
  if (sign_ == o.sign_) {
    mag_ = add_mag(mag_, o.mag_);
    return *this;
  }
  int c = cmp_mag(mag_, o.mag_);
  if (c == 0) {
    mag_.clear();
    sign_ = 0;
  } else if (c > 0) {
    mag_ = sub_mag(mag_, o.mag_);
  } else {
    mag_ = sub_mag(o.mag_, mag_);
    sign_ = o.sign_;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  if (sign_ == 0 || o.sign_ == 0) {
    sign_ = 0;
    mag_.clear();
    return *this;
  }
  std::vector<std::uint32_t> r(mag_.size() + o.mag_.size(), 0);
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.mag_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(mag_[i]) * o.mag_[j] + r[i + j] + carry;
      r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    std::size_t pos = i + o.mag_.size();
    while (carry) {
      std::uint64_t cur = r[pos] + carry;
      r[pos] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
      ++pos;
    }
  }
  mag_ = std::move(r);
  sign_ *= o.sign_;
  trim();
  return *this;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<std::uint32_t> m = mag_;
  std::string digits;
  while (!m.empty()) {
    // Divide the magnitude by 10^9, collecting the remainder.
    std::uint64_t rem = 0;
    for (std::size_t i = m.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::from_string(std::string_view s) {
  std::size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i == s.size()) throw FormatError("empty integer literal");
  BigInt r;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw FormatError("bad digit in integer literal: " + std::string(s));
    r *= BigInt(10);
    r += BigInt(s[i] - '0');
  }
  if (sign < 0) r = -r;
  return r;
}

long long BigInt::to_ll() const {
  if (sign_ == 0) return 0;
  if (mag_.size() > 2) throw DomainError("BigInt out of long long range: " + to_string());
  unsigned long long u = mag_[0];
  if (mag_.size() == 2) u |= static_cast<unsigned long long>(mag_[1]) << 32;
  if (sign_ > 0) {
    if (u > 0x7fffffffffffffffull) throw DomainError("BigInt out of long long range");
    return static_cast<long long>(u);
  }
  if (u > 0x8000000000000000ull) throw DomainError("BigInt out of long long range");
  return -static_cast<long long>(u - 1) - 1;
}

}  // namespace braidhom
