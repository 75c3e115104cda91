#ifndef BRAIDHOM_GROUP_WORD_HPP
#define BRAIDHOM_GROUP_WORD_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidhom {

// Which fundamental group a word lives in.
//  - free_group(n):     free group on generators a1..an
//  - torus:             ℤ², generators u, v; words are exponent pairs
//  - surface(genus g):  one-relator group on a1,b1,..,ag,bg with relator
//                       [a1,b1]...[ag,bg]
enum class GroupKind { free_group, torus, surface };

struct Letter {
  int gen = 0;         // generator index, 0-based
  long long exp = 0;   // nonzero
  bool operator==(const Letter&) const = default;
};

// A reduced word: freely reduced for free/surface kinds, Dehn-reduced in
// addition for surface kinds, an exponent pair for the torus. Immutable
// after construction.
class GroupWord {
 public:
  GroupWord() = default;

  static GroupWord identity(GroupKind kind, int rank);
  static GroupWord torus_word(long long m, long long n);
  // Reduces (free reduction, then Dehn reduction on surface words).
  static GroupWord from_letters(GroupKind kind, int rank, std::vector<Letter> letters);
  // Inverse of str(); `rank` is the generator count for free kinds and the
  // genus for surface kinds.
  static GroupWord parse(GroupKind kind, int rank, std::string_view text);

  GroupKind kind() const { return kind_; }
  int rank() const { return rank_; }
  int generator_count() const;
  const std::vector<Letter>& letters() const { return letters_; }
  std::pair<long long, long long> torus_exponents() const { return {tm_, tn_}; }
  bool is_identity() const;
  // Sum of |exponents| (torus: |m| + |n|).
  long long length() const;

  GroupWord inverse() const;

  // Exponent sum per generator (size generator_count()); a homomorphism to
  // ℤ^rank for every kind here, since all defining relators are products
  // of commutators.
  std::vector<long long> abelianization() const;

  // Spaced encoding, e.g. "a1 b1^-1"; identity prints "e".
  std::string str() const;
  // Whitespace-free encoding used inside generator labels, e.g. "a1.b1^-1".
  std::string compact() const;

  bool operator==(const GroupWord& o) const;
  // Deterministic order: length, then compact() bytes. Used for tie-breaks.
  bool operator<(const GroupWord& o) const;

  friend GroupWord operator*(const GroupWord& u, const GroupWord& v);

 private:
  GroupKind kind_ = GroupKind::free_group;
  int rank_ = 0;
  std::vector<Letter> letters_;
  long long tm_ = 0, tn_ = 0;
};

// Name of generator `idx` for the given kind ("a2", "b1", "u", ...).
std::string generator_name(GroupKind kind, int idx);

// Surface-group Dehn reduction on a flat ±1 letter sequence (signed
// generator encoding g = ±(index+1)): repeatedly replaces any subword
// covering more than half of a cyclic rotation of the relator (or its
// inverse) by the shorter complement, then freely reduces. Exposed for the
// chord enumerator, which also needs triviality tests.
std::vector<int> dehn_reduce_flat(int genus, std::vector<int> flat);

// Whether the word represents the identity of the surface group.
bool surface_word_is_trivial(int genus, const std::vector<int>& flat);

std::vector<int> flatten_word(const GroupWord& w);

}  // namespace braidhom

#endif
