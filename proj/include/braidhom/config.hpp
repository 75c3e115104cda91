#ifndef BRAIDHOM_CONFIG_HPP
#define BRAIDHOM_CONFIG_HPP

#include <string>

#include "braidhom/chords.hpp"
#include "braidhom/morse.hpp"

namespace braidhom {

// One flat bag of settings shared by every subcommand; flags mirror config
// keys 1:1 (see docs/formats.md). Validation happens before any
// computation starts.
struct RunConfig {
  // Surface / chords.
  std::string surface = "torus";  // "torus" | "hyperbolic"
  int genus = 2;
  double dx = 0.3, dy = 0.0;
  double cutoff = 1.5;

  // Braid exponents.
  long long k = 0;
  long long kprime = 0;

  // Mode for the wrapped differential.
  std::string mode = "symbolic";  // "symbolic" | "morse"

  // Morse model.
  double U = 5.0, eps0 = 0.1, eps1 = 0.5;
  double softening = 1.0;  // m in the G profile
  double onset = 1.0;      // x1, wrapping derivative onset
  std::string seed_grid = "200x64";
  int n_fan = 720;
  double tol_grad = 1e-9;

  // Output.
  std::string out = "-";
  std::string svg;
  bool mod2 = false;

  SurfaceSpec surface_spec() const;
  MorseParams morse_params() const;  // uses k as the twist exponent
  void validate() const;             // throws DomainError on bad combinations
};

}  // namespace braidhom

#endif
