#ifndef BRAIDHOM_BRAID_HPP
#define BRAIDHOM_BRAID_HPP

#include <string>
#include <string_view>
#include <vector>

namespace braidhom {

// Words in the 2-strand braid group of a genus-g surface, generated by the
// half twist s (printed "s") together with a1..a{2g}. Generator index 0 is
// s, index i >= 1 is a_i.
struct BraidLetter {
  int gen = 0;         // 0 = s, i >= 1 = a_i
  long long exp = 0;   // nonzero
  bool operator==(const BraidLetter&) const = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  static BraidWord identity(int genus);
  static BraidWord from_letters(int genus, std::vector<BraidLetter> letters);
  static BraidWord sigma_power(int genus, long long k);
  // Grammar: whitespace-separated "s", "a3", with optional "^<exp>".
  static BraidWord parse(int genus, std::string_view text);

  int genus() const { return genus_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }

  BraidWord inverse() const;
  friend BraidWord operator*(const BraidWord& u, const BraidWord& v);
  bool operator==(const BraidWord& o) const = default;

  std::string str() const;

  // Exponent sums in the free group on {s, a1..a2g}: index 0 is the
  // s-count, index i the a_i-count. Not a braid-group invariant (the
  // relators do not all vanish here); used for rewriting checks.
  std::vector<long long> free_abelianization() const;

  // Image in H_1 of the braid group: (s-count mod 2, a_i-counts). Every
  // defining relator vanishes under this map.
  std::pair<int, std::vector<long long>> abelianization() const;

 private:
  int genus_ = 1;
  std::vector<BraidLetter> letters_;
};

// Words in the pure-braid subgroup generators t, a_i, A_i. Index 0 is t,
// 1..2g are a_i, 2g+1..4g are A_i.
class PureBraidWord {
 public:
  PureBraidWord() = default;
  static PureBraidWord from_letters(int genus, std::vector<BraidLetter> letters);
  int genus() const { return genus_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::string str() const;
  bool operator==(const PureBraidWord& o) const = default;

  // Expansion back into {s, a_i} via t = s^2, A_i = s^-1 a_i s^-1.
  BraidWord expand() const;

 private:
  int genus_ = 1;
  std::vector<BraidLetter> letters_;
};

// Parity map: (-1)^(s-exponent sum). Returns +1 or -1.
int delta(const BraidWord& w);

// Exponent k with w = s^k. Throws DomainError naming the offending letter
// when the reduced word contains anything but s.
long long sigma_exponent(const BraidWord& w);

// Rewrites an even braid word (delta = +1) as a word in the pure-braid
// generators t, a_i, A_i by a left-to-right coset-tracking substitution (the
// table is documented in docs/presentation.md). The result equals the input
// in the free group on {s, a_i}, hence in the braid group.
PureBraidWord to_pure_generators(const BraidWord& w);

// Defining relators of the 2-strand surface braid group, each emitted as
// (lhs)(rhs)^-1, plus the pure-braid relators expanded into {s, a_i}. Test
// data, not rewrite rules.
std::vector<BraidWord> relator_list(int genus);

}  // namespace braidhom

#endif
