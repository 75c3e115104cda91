#include "braidhom/invariant.hpp"

#include <algorithm>

#include "braidhom/errors.hpp"

namespace braidhom {

long long reduce_pair(long long k, long long kprime) { return k - kprime; }

namespace {

LaurentPoly scaling_poly(const ColumnScaling& s) {
  if (s.sign != 1 && s.sign != -1)
    throw DomainError("column scaling must be invertible (sign ±1)");
  return LaurentPoly(BigInt(s.sign), s.mono);
}

// Fold map Id ⊕ δ_k of a triangle, evaluated on an exterior chain.
BimoduleElement apply_fold(const TrianglePackage& t, const BimoduleElement& x) {
  BimoduleElement out;
  for (const auto& [label, poly] : x.terms()) {
    auto it = t.connecting.find(label);
    if (it == t.connecting.end()) throw DomainError("fold map: unknown exterior generator " + label);
    out += it->second.scaled_poly(poly);
  }
  return out;
}

}  // namespace

Verdict distinguish(long long k, long long kprime, const std::vector<Chord>& chords) {
  if (chords.empty()) throw DomainError("distinguish: empty chord set");
  Verdict verdict;
  verdict.kappa = reduce_pair(k, kprime);

  TrianglePackage t0 = build_triangle(chords, 0);
  TrianglePackage tk = build_triangle(chords, verdict.kappa);

  // ker(Id ⊕ δ₀) per γ: the wrapped H₁ generators of the untwisted
  // triangle, pushed into the exterior (exactness at the quotient
  // position identifies them with the kernel of the fold map).
  std::optional<Obstruction> best;
  for (const HomologySummand& s : homology_unit_pivot(t0.total)) {
    if (s.degree != 1) continue;
    for (const BimoduleElement& gen : s.generators) {
      // Exterior representative; normalize so the c- component is +1.
      BimoduleElement z;
      for (const auto& [label, poly] : gen.terms())
        if (t0.quotient.find_generator(label) != nullptr)
          z += BimoduleElement::single(label, poly);
      std::string lminus = generator_label(GeneratorTier::cminus, s.gamma);
      const LaurentPoly* uc = z.coefficient(lminus);
      if (uc != nullptr && uc->is_unit_monomial()) z = z.scaled_poly(uc->unit_inverse());

      if (!apply_fold(t0, z).is_zero())
        throw DomainError("distinguish: kernel generator fails ker(Id ⊕ δ₀) check");
      BimoduleElement image = apply_fold(tk, z);
      if (image.is_zero()) continue;

      Obstruction ob;
      ob.gamma = s.gamma;
      for (const auto& [label, poly] : z.terms()) {
        const ChordGenerator* g = t0.quotient.find_generator(label);
        if (g->tier == GeneratorTier::cminus)
          ob.u += BimoduleElement::single(label, poly);
        else
          ob.v += BimoduleElement::single(label, poly);
      }
      ob.image = std::move(image);
      if (!best || ob.gamma.compact() < best->gamma.compact()) best = std::move(ob);
    }
  }
  if (best) {
    verdict.distinguished = true;
    verdict.witness = std::move(best);
  }
  return verdict;
}

bool diagram_check(long long kappa, const ColumnMap& phi, const std::vector<Chord>& chords) {
  if (chords.empty()) throw DomainError("diagram_check: empty chord set");
  for (const auto& [key, s] : phi) (void)scaling_poly(s);  // reject non-invertible data

  TrianglePackage t0 = build_triangle(chords, 0);
  TrianglePackage tk = build_triangle(chords, kappa);

  for (const Chord& c : chords) {
    LaurentPoly s = LaurentPoly::unit();
    auto it = phi.find(c.gamma.compact());
    if (it != phi.end()) s = scaling_poly(it->second);
    for (GeneratorTier tier : {GeneratorTier::cminus, GeneratorTier::cplus}) {
      BimoduleElement x = BimoduleElement::generator(generator_label(tier, c.gamma));
      // φ then Id ⊕ δ_κ, against Id ⊕ δ₀ then φ (φ scales the whole γ line).
      BimoduleElement lhs = apply_fold(tk, x.scaled_poly(s));
      BimoduleElement rhs = apply_fold(t0, x).scaled_poly(s);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace braidhom
