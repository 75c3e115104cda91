#ifndef BRAIDHOM_CHORDS_HPP
#define BRAIDHOM_CHORDS_HPP

#include <string>
#include <vector>

#include "braidhom/group_word.hpp"

namespace braidhom {

// The surface carrying the two unit fibers. Sphere input is rejected:
// there is a contractible chord class and the free-bimodule description
// fails there.
struct SurfaceSpec {
  enum class Kind { torus, hyperbolic };
  Kind kind = Kind::torus;
  int genus = 2;                 // hyperbolic only, >= 2
  double dx = 0.3, dy = 0.0;     // torus basepoint displacement, fundamental domain [0,1)^2

  static SurfaceSpec torus(double dx = 0.3, double dy = 0.0);
  static SurfaceSpec hyperbolic(int genus);
};

// One Reeb-chord generator class: the path-homotopy class gamma between the
// two fibers, plus an action proxy (lifted Euclidean displacement length on
// the torus, reduced word length on hyperbolic surfaces).
struct Chord {
  GroupWord gamma;
  double action = 0.0;
};

// All chord classes of action (torus) or word length (hyperbolic) at most
// `cutoff`, each class exactly once, sorted by action with lexicographic
// tie-break on the word encoding.
std::vector<Chord> enumerate_chords(const SurfaceSpec& spec, double cutoff);

// Dehn reduction of a hyperbolic-surface word against the SurfaceSpec
// presentation; idempotent, preserves the group element.
GroupWord dehn_reduce(const GroupWord& w, const SurfaceSpec& spec);

}  // namespace braidhom

#endif
