#ifndef BRAIDHOM_INVARIANT_HPP
#define BRAIDHOM_INVARIANT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidhom/complex.hpp"

namespace braidhom {

// Witness that the exact triangles of two local braids cannot be
// intertwined with the identity on the exterior column: an element of
// ker(Id ⊕ δ₀) whose image under Id ⊕ δ_κ is nonzero.
struct Obstruction {
  GroupWord gamma;
  BimoduleElement u;      // component on the c- summand
  BimoduleElement v;      // component on the c+ summand
  BimoduleElement image;  // (Id ⊕ δ_κ)(u, v), nonzero for a witness
};

struct Verdict {
  bool distinguished = false;
  long long kappa = 0;
  std::optional<Obstruction> witness;
};

// Gluing reduction: comparing σ^k with σ^{k'} reduces to σ^{k-k'} vs σ^0.
long long reduce_pair(long long k, long long kprime);

// Decides whether the exact triangles of σ^k and σ^{k'} are distinguished
// by the invariant. Builds the triangles for κ = k - k' and 0, computes
// ker(Id ⊕ δ₀) per γ and pushes its generators through Id ⊕ δ_κ; any
// nonzero image is a witness. Returns distinguished ⟺ κ ≠ 0.
Verdict distinguish(long long k, long long kprime, const std::vector<Chord>& chords);

// Candidate automorphism of the exterior column: one invertible scaling
// ±μ_x^a μ_y^b per chord class (the only bimodule automorphisms of a
// rank-1 free bimodule, see docs/presentation.md).
struct ColumnScaling {
  int sign = 1;  // ±1
  LaurentBimonomial mono;
};

using ColumnMap = std::map<std::string, ColumnScaling>;  // key: gamma.compact()

// Whether scaling the exterior column by φ makes the connecting squares of
// the κ-twisted and untwisted triangles commute: for every generator x of
// the exterior block, φ((Id ⊕ δ₀)(x)) must equal (Id ⊕ δ_κ)(φ(x)).
// Classes missing from φ default to the identity scaling. Throws
// DomainError when a scaling is not invertible.
bool diagram_check(long long kappa, const ColumnMap& phi, const std::vector<Chord>& chords);

}  // namespace braidhom

#endif
