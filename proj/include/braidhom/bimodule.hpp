#ifndef BRAIDHOM_BIMODULE_HPP
#define BRAIDHOM_BIMODULE_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "braidhom/bigint.hpp"

namespace braidhom {

// μ_x^a μ_y^b. The unit is (0,0).
struct LaurentBimonomial {
  long long a = 0;  // exponent of μ_x
  long long b = 0;  // exponent of μ_y
  bool operator==(const LaurentBimonomial&) const = default;
  auto operator<=>(const LaurentBimonomial&) const = default;
  LaurentBimonomial inverse() const { return {-a, -b}; }
  friend LaurentBimonomial operator*(LaurentBimonomial l, LaurentBimonomial r) {
    return {l.a + r.a, l.b + r.b};
  }
  std::string str() const;
  static LaurentBimonomial parse(std::string_view s);
};

// Element of ℤ[μ_x^{±1}, μ_y^{±1}]. The two Laurent variables commute, so
// left μ_x-action and right μ_y-action on a free bimodule are both just
// multiplication by such a polynomial.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(BigInt c, LaurentBimonomial m = {});

  static LaurentPoly unit() { return LaurentPoly(BigInt(1)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<LaurentBimonomial, BigInt>& terms() const { return terms_; }

  // Single term with coefficient ±1?
  bool is_unit_monomial() const;
  // Requires is_unit_monomial().
  LaurentPoly unit_inverse() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly l, const LaurentPoly& r) { return l += r; }
  friend LaurentPoly operator-(LaurentPoly l, const LaurentPoly& r) { return l -= r; }
  friend LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r);

  LaurentPoly shifted(LaurentBimonomial by) const;
  LaurentPoly scaled(const BigInt& n) const;
  LaurentPoly mod2() const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

 private:
  std::map<LaurentBimonomial, BigInt> terms_;  // nonzero coefficients only
  void add_term(LaurentBimonomial m, const BigInt& c);
};

// Finite ℤ-linear combination of μ_x^a · <label> · μ_y^b. Labels are opaque
// strings owned by whoever builds the complex; they must not contain
// whitespace or the '·' separator.
class BimoduleElement {
 public:
  BimoduleElement() = default;

  static BimoduleElement generator(const std::string& label) {
    return single(label, LaurentPoly::unit());
  }
  static BimoduleElement single(const std::string& label, LaurentPoly coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::string, LaurentPoly>& terms() const { return terms_; }
  const LaurentPoly* coefficient(const std::string& label) const;

  BimoduleElement& operator+=(const BimoduleElement& o);
  BimoduleElement& operator-=(const BimoduleElement& o);
  BimoduleElement operator-() const;
  friend BimoduleElement operator+(BimoduleElement l, const BimoduleElement& r) { return l += r; }
  friend BimoduleElement operator-(BimoduleElement l, const BimoduleElement& r) { return l -= r; }

  BimoduleElement scaled(const BigInt& n) const;
  // Multiply every coefficient by a Laurent polynomial.
  BimoduleElement scaled_poly(const LaurentPoly& p) const;
  BimoduleElement mod2() const;

  bool operator==(const BimoduleElement& o) const { return terms_ == o.terms_; }

  // Sum grammar "±n·x^a y^b·<label> ..." (zero element prints "0"), see
  // docs/formats.md.
  std::string str() const;
  static BimoduleElement parse(std::string_view s);

 private:
  std::map<std::string, LaurentPoly> terms_;  // nonzero polys only
  void normalize();
};

// Two-sided action: shifts every term by μ_x^{left.a} on the left and
// μ_y^{right.b} on the right. Only the μ_x-component of `left` and the
// μ_y-component of `right` participate; the other components belong to the
// opposite ring and do not act.
BimoduleElement bimodule_act(LaurentBimonomial left, const BimoduleElement& x,
                             LaurentBimonomial right);

inline BimoduleElement bimodule_add(const BimoduleElement& x, const BimoduleElement& y) {
  return x + y;
}
inline BimoduleElement bimodule_scale(const BigInt& n, const BimoduleElement& x) {
  return x.scaled(n);
}

}  // namespace braidhom

#endif
