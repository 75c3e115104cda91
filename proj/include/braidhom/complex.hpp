#ifndef BRAIDHOM_COMPLEX_HPP
#define BRAIDHOM_COMPLEX_HPP

#include <map>
#include <string>
#include <vector>

#include "braidhom/bimodule.hpp"
#include "braidhom/chords.hpp"
#include "braidhom/group_word.hpp"
#include "braidhom/morse.hpp"

namespace braidhom {

enum class GeneratorTier { c0, cminus, cplus };

std::string tier_str(GeneratorTier t);

struct ChordGenerator {
  std::string label;  // "c0[<gamma>]", "c-[<gamma>]", "c+[<gamma>]"
  GroupWord gamma;
  GeneratorTier tier = GeneratorTier::c0;
  int degree = 0;  // relative degrees: deg c0 = 0, deg c± = 1
};

std::string generator_label(GeneratorTier tier, const GroupWord& gamma);

// Graded free bimodule with a differential. Construction checks that
// labels are unique, that the differential lowers degree by exactly one
// and that it preserves the homotopy class (per-γ block support).
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(std::string name, std::vector<ChordGenerator> basis,
               std::map<std::string, BimoduleElement> diff);

  const std::string& name() const { return name_; }
  const std::vector<ChordGenerator>& basis() const { return basis_; }
  const ChordGenerator* find_generator(const std::string& label) const;
  const BimoduleElement& differential(const std::string& label) const;

  // Linear extension of the differential to arbitrary elements.
  BimoduleElement apply_differential(const BimoduleElement& x) const;

  // Labels with ∂∘∂ ≠ 0 (empty means the complex axiom holds).
  std::vector<std::pair<std::string, BimoduleElement>> d_squared_report() const;

  std::string serialize(bool mod2 = false) const;
  static ChainComplex parse(const std::string& text);

 private:
  std::string name_;
  std::vector<ChordGenerator> basis_;
  std::map<std::string, BimoduleElement> diff_;
};

// One degree-0 generator c0_γ per chord, zero differential.
ChainComplex build_cylindrical(const std::vector<Chord>& chords);

// Basis {c0, c-, c+} per γ with ∂c0 = 0, ∂c- = c0, ∂c+ = μ_x^{-k} c0 μ_y^k.
ChainComplex build_wrapped(const std::vector<Chord>& chords, long long k);

// Same complex with the differential assembled from critical points,
// rigid-trajectory counts and windings of the Morse model (params.k is the
// twist exponent). Throws NumericalError with both serializations if the
// numeric differential deviates from the symbolic one.
ChainComplex build_wrapped_morse(const std::vector<Chord>& chords, const MorseParams& params);

// Quotient by a ∂-closed subcomplex: basis = total minus sub, differential
// = total's with sub generators deleted.
ChainComplex quotient_exterior(const ChainComplex& total, const ChainComplex& sub);

// Free homology summand of one γ-block in one degree.
struct HomologySummand {
  GroupWord gamma;
  int degree = 0;
  std::vector<BimoduleElement> generators;
};

// Homology via unit-pivot elimination. Supported class: in every degree
// and γ-block, elimination only ever needs pivots that are ±μ_x^a μ_y^b;
// outside it an UnsupportedError is thrown. Zero summands are omitted.
std::vector<HomologySummand> homology_unit_pivot(const ChainComplex& c);

struct TrianglePackage {
  ChainComplex sub;       // cylindrical complex
  ChainComplex total;     // wrapped complex
  ChainComplex quotient;  // exterior complex
  // Connecting map on exterior generators (degree -1), the part of the
  // wrapped differential that crosses into the subcomplex.
  std::map<std::string, BimoduleElement> connecting;
};

TrianglePackage build_triangle(const std::vector<Chord>& chords, long long k);

struct ExactnessIssue {
  GroupWord gamma;
  int degree = 0;
  std::string position;  // "sub", "total" or "quotient"
  std::string detail;
};

struct ExactnessReport {
  bool exact = true;
  std::vector<ExactnessIssue> issues;
};

// Checks im = ker at the sub, total and quotient positions of the induced
// long exact sequence, per γ and degree, using homology_unit_pivot
// generators.
ExactnessReport verify_exactness(const TrianglePackage& t);

}  // namespace braidhom

#endif
