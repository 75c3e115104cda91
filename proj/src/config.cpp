#include "braidhom/config.hpp"

#include <cstdio>

#include "braidhom/errors.hpp"

namespace braidhom {

SurfaceSpec RunConfig::surface_spec() const {
  if (surface == "torus") return SurfaceSpec::torus(dx, dy);
  if (surface == "hyperbolic") return SurfaceSpec::hyperbolic(genus);
  if (surface == "sphere")
    throw DomainError("the sphere is excluded: chord classes are not indexed by a free bimodule");
  throw DomainError("unknown surface kind: " + surface);
}

MorseParams RunConfig::morse_params() const {
  MorseParams p;
  p.k = k;
  p.U = U;
  p.eps0 = eps0;
  p.eps1 = eps1;
  p.softening = softening;
  p.onset = onset;
  p.n_fan = n_fan;
  p.tol_grad = tol_grad;
  int na = 0, nt = 0;
  if (std::sscanf(seed_grid.c_str(), "%dx%d", &na, &nt) != 2 || na < 2 || nt < 2)
    throw DomainError("bad seed-grid (expected <na>x<ntheta>): " + seed_grid);
  p.seeds_a = na;
  p.seeds_theta = nt;
  return p;
}

void RunConfig::validate() const {
  (void)surface_spec();
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
  if (mode != "symbolic" && mode != "morse") throw DomainError("mode must be symbolic or morse");
  (void)morse_params();      // grid syntax and ranges
  (void)MorseProblem(morse_params());  // full model validity
}

}  // namespace braidhom
