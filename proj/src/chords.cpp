#include "braidhom/chords.hpp"

#include <algorithm>
#include <cmath>

#include "braidhom/errors.hpp"

namespace braidhom {

SurfaceSpec SurfaceSpec::torus(double dx, double dy) {
  SurfaceSpec s;
  s.kind = Kind::torus;
  s.dx = dx;
  s.dy = dy;
  return s;
}

SurfaceSpec SurfaceSpec::hyperbolic(int genus) {
  if (genus < 2) throw DomainError("hyperbolic surface needs genus >= 2 (sphere and torus excluded)");
  SurfaceSpec s;
  s.kind = Kind::hyperbolic;
  s.genus = genus;
  return s;
}

namespace {

bool chord_less(const Chord& l, const Chord& r) {
  if (l.action != r.action) return l.action < r.action;
  return l.gamma.compact() < r.gamma.compact();
}

std::vector<Chord> enumerate_torus(const SurfaceSpec& spec, double cutoff) {
  std::vector<Chord> out;
  long long mlo = static_cast<long long>(std::floor(-spec.dx - cutoff));
  long long mhi = static_cast<long long>(std::ceil(-spec.dx + cutoff));
  long long nlo = static_cast<long long>(std::floor(-spec.dy - cutoff));
  long long nhi = static_cast<long long>(std::ceil(-spec.dy + cutoff));
  for (long long m = mlo; m <= mhi; ++m)
    for (long long n = nlo; n <= nhi; ++n) {
      double action = std::hypot(spec.dx + static_cast<double>(m), spec.dy + static_cast<double>(n));
      if (action <= cutoff) out.push_back({GroupWord::torus_word(m, n), action});
    }
  std::sort(out.begin(), out.end(), chord_less);
  return out;
}

// Depth-first enumeration of freely reduced words up to the length cutoff,
// filtered to Dehn-reduced representatives and deduplicated by group
// element (distinct Dehn-reduced words can still be equal, e.g. the two
// halves of the relator).
void enumerate_hyperbolic_rec(int genus, int max_len, std::vector<int>& word,
                              std::vector<std::vector<int>>& found) {
  found.push_back(word);
  if (static_cast<int>(word.size()) >= max_len) return;
  for (int gen = 1; gen <= 2 * genus; ++gen) {
    for (int sign : {1, -1}) {
      int letter = sign * gen;
      if (!word.empty() && word.back() == -letter) continue;
      word.push_back(letter);
      if (dehn_reduce_flat(genus, word).size() == word.size())
        enumerate_hyperbolic_rec(genus, max_len, word, found);
      word.pop_back();
    }
  }
}

std::vector<Chord> enumerate_hyperbolic(const SurfaceSpec& spec, double cutoff) {
  int max_len = static_cast<int>(std::floor(cutoff));
  std::vector<std::vector<int>> words;
  std::vector<int> scratch;
  enumerate_hyperbolic_rec(spec.genus, max_len, scratch, words);

  std::vector<Chord> out;
  for (const std::vector<int>& flat : words) {
    GroupWord w = GroupWord::from_letters(GroupKind::surface, spec.genus, [&] {
      std::vector<Letter> ls;
      for (int l : flat) ls.push_back({std::abs(l) - 1, l > 0 ? 1 : -1});
      return ls;
    }());
    if (flatten_word(w).size() != flat.size()) continue;  // not Dehn-reduced as written
    Chord c{w, static_cast<double>(w.length())};
    // Element-level dedup: keep the lexicographically least representative.
    // Distinct abelianizations already separate elements, so the Dehn
    // triviality test only runs on the survivors of that cheap filter.
    bool duplicate = false;
    for (Chord& prev : out) {
      if (prev.gamma.abelianization() != c.gamma.abelianization()) continue;
      std::vector<int> uv = flatten_word(prev.gamma);
      std::vector<int> inv = flatten_word(c.gamma.inverse());
      uv.insert(uv.end(), inv.begin(), inv.end());
      if (surface_word_is_trivial(spec.genus, uv)) {
        if (c.gamma < prev.gamma) prev = c;  // shorter or lex-smaller representative
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), chord_less);
  return out;
}

}  // namespace

std::vector<Chord> enumerate_chords(const SurfaceSpec& spec, double cutoff) {
  if (cutoff < 0) throw DomainError("enumerate_chords: negative cutoff");
  if (spec.kind == SurfaceSpec::Kind::torus) return enumerate_torus(spec, cutoff);
  return enumerate_hyperbolic(spec, cutoff);
}

GroupWord dehn_reduce(const GroupWord& w, const SurfaceSpec& spec) {
  if (spec.kind != SurfaceSpec::Kind::hyperbolic)
    throw DomainError("dehn_reduce needs a hyperbolic surface spec");
  if (w.kind() != GroupKind::surface || w.rank() != spec.genus)
    throw DomainError("dehn_reduce: word does not live on this surface");
  // GroupWord construction already normalizes; rebuild to make idempotence
  // explicit.
  return GroupWord::from_letters(GroupKind::surface, spec.genus, w.letters());
}

}  // namespace braidhom
