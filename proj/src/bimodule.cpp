#include "braidhom/bimodule.hpp"

#include <sstream>

#include "braidhom/errors.hpp"

namespace braidhom {

std::string LaurentBimonomial::str() const {
  return "x^" + std::to_string(a) + " y^" + std::to_string(b);
}

LaurentBimonomial LaurentBimonomial::parse(std::string_view s) {
  std::istringstream is{std::string(s)};
  std::string tx, ty;
  if (!(is >> tx >> ty) || tx.rfind("x^", 0) != 0 || ty.rfind("y^", 0) != 0)
    throw FormatError("bad bimonomial: " + std::string(s));
  try {
    return {std::stoll(tx.substr(2)), std::stoll(ty.substr(2))};
  } catch (const std::exception&) {
    throw FormatError("bad bimonomial exponent: " + std::string(s));
  }
}

LaurentPoly::LaurentPoly(BigInt c, LaurentBimonomial m) {
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

void LaurentPoly::add_term(LaurentBimonomial m, const BigInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool LaurentPoly::is_unit_monomial() const {
  return terms_.size() == 1 &&
         (terms_.begin()->second.is_one() || terms_.begin()->second.is_minus_one());
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit_monomial()) throw DomainError("unit_inverse of a non-unit polynomial");
  const auto& [m, c] = *terms_.begin();
  return LaurentPoly(c, m.inverse());
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r) {
  LaurentPoly out;
  for (const auto& [ml, cl] : l.terms_)
    for (const auto& [mr, cr] : r.terms_) out.add_term(ml * mr, cl * cr);
  return out;
}

LaurentPoly LaurentPoly::shifted(LaurentBimonomial by) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m * by, c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& n) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * n);
  return r;
}

LaurentPoly LaurentPoly::mod2() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_)
    if (c.odd()) r.terms_.emplace(m, BigInt(1));
  return r;
}

BimoduleElement BimoduleElement::single(const std::string& label, LaurentPoly coeff) {
  BimoduleElement e;
  if (!coeff.is_zero()) e.terms_.emplace(label, std::move(coeff));
  return e;
}

const LaurentPoly* BimoduleElement::coefficient(const std::string& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? nullptr : &it->second;
}

void BimoduleElement::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

BimoduleElement& BimoduleElement::operator+=(const BimoduleElement& o) {
  for (const auto& [l, p] : o.terms_) {
    auto [it, inserted] = terms_.emplace(l, p);
    if (!inserted) it->second += p;
  }
  normalize();
  return *this;
}

BimoduleElement& BimoduleElement::operator-=(const BimoduleElement& o) { return *this += -o; }

BimoduleElement BimoduleElement::operator-() const {
  BimoduleElement r;
  for (const auto& [l, p] : terms_) r.terms_.emplace(l, -p);
  return r;
}

BimoduleElement BimoduleElement::scaled(const BigInt& n) const {
  BimoduleElement r;
  for (const auto& [l, p] : terms_) r.terms_.emplace(l, p.scaled(n));
  r.normalize();
  return r;
}

BimoduleElement BimoduleElement::scaled_poly(const LaurentPoly& p) const {
  BimoduleElement r;
  for (const auto& [l, q] : terms_) r.terms_.emplace(l, p * q);
  r.normalize();
  return r;
}

BimoduleElement BimoduleElement::mod2() const {
  BimoduleElement r;
  for (const auto& [l, p] : terms_) r.terms_.emplace(l, p.mod2());
  r.normalize();
  return r;
}

BimoduleElement bimodule_act(LaurentBimonomial left, const BimoduleElement& x,
                             LaurentBimonomial right) {
  BimoduleElement r;
  LaurentBimonomial shift{left.a, right.b};
  for (const auto& [l, p] : x.terms()) r += BimoduleElement::single(l, p.shifted(shift));
  return r;
}

std::string BimoduleElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, poly] : terms_) {
    for (const auto& [m, c] : poly.terms()) {
      if (!first) os << ' ';
      first = false;
      os << (c.sign() < 0 ? "-" : "+") << (c.sign() < 0 ? (-c).to_string() : c.to_string())
         << "·" << m.str() << "·" << label;
    }
  }
  return os.str();
}

BimoduleElement BimoduleElement::parse(std::string_view s) {
  BimoduleElement out;
  std::istringstream is{std::string(s)};
  std::string tok;
  const std::string dot = "·";
  while (is >> tok) {
    if (tok == "0") continue;
    // ±n·x^a·... arrives split on spaces as "±n·x^a" and "y^b·label".
    std::string tok2;
    if (!(is >> tok2)) throw FormatError("truncated bimodule term: " + tok);
    std::size_t d1 = tok.find(dot);
    std::size_t d2 = tok2.find(dot);
    if (d1 == std::string::npos || d2 == std::string::npos)
      throw FormatError("bad bimodule term: " + tok + " " + tok2);
    BigInt coeff = BigInt::from_string(tok.substr(0, d1));
    LaurentBimonomial m =
        LaurentBimonomial::parse(tok.substr(d1 + dot.size()) + " " + tok2.substr(0, d2));
    std::string label = tok2.substr(d2 + dot.size());
    if (label.empty()) throw FormatError("empty label in bimodule term");
    out += single(label, LaurentPoly(coeff, m));
  }
  return out;
}

}  // namespace braidhom
