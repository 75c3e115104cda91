#include "braidhom/braid.hpp"

#include <cstdlib>
#include <sstream>

#include "braidhom/errors.hpp"

namespace braidhom {

namespace {

std::vector<BraidLetter> reduce(std::vector<BraidLetter> in) {
  std::vector<BraidLetter> out;
  for (const BraidLetter& l : in) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::string render(const std::vector<BraidLetter>& letters,
                   const std::string (*name)(int)) {
  if (letters.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const BraidLetter& l : letters) {
    if (!first) os << ' ';
    first = false;
    os << name(l.gen);
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

const std::string braid_gen_name(int gen) {
  return gen == 0 ? std::string("s") : "a" + std::to_string(gen);
}

}  // namespace

BraidWord BraidWord::identity(int genus) {
  if (genus < 1) throw DomainError("braid words need genus >= 1");
  BraidWord w;
  w.genus_ = genus;
  return w;
}

BraidWord BraidWord::from_letters(int genus, std::vector<BraidLetter> letters) {
  BraidWord w = identity(genus);
  for (const BraidLetter& l : letters)
    if (l.gen < 0 || l.gen > 2 * genus)
      throw DomainError("braid generator index out of range: " + std::to_string(l.gen));
  w.letters_ = reduce(std::move(letters));
  return w;
}

BraidWord BraidWord::sigma_power(int genus, long long k) {
  return from_letters(genus, {{0, k}});
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> rev;
  for (std::size_t i = letters_.size(); i-- > 0;) rev.push_back({letters_[i].gen, -letters_[i].exp});
  return from_letters(genus_, std::move(rev));
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.genus_ != v.genus_) throw DomainError("braid words of different genus");
  std::vector<BraidLetter> cat = u.letters_;
  cat.insert(cat.end(), v.letters_.begin(), v.letters_.end());
  return BraidWord::from_letters(u.genus_, std::move(cat));
}

std::string BraidWord::str() const { return render(letters_, braid_gen_name); }

std::vector<long long> BraidWord::free_abelianization() const {
  std::vector<long long> sums(2 * genus_ + 1, 0);
  for (const BraidLetter& l : letters_) sums[l.gen] += l.exp;
  return sums;
}

std::pair<int, std::vector<long long>> BraidWord::abelianization() const {
  std::vector<long long> free_sums = free_abelianization();
  int parity = static_cast<int>(((free_sums[0] % 2) + 2) % 2);
  return {parity, std::vector<long long>(free_sums.begin() + 1, free_sums.end())};
}

BraidWord BraidWord::parse(int genus, std::string_view text) {
  std::vector<BraidLetter> letters;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "e" || tok == "1") continue;
    std::size_t caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    long long exp = 1;
    if (caret != std::string::npos) {
      try {
        exp = std::stoll(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw FormatError("bad exponent in braid token: " + tok);
      }
    }
    int gen = -1;
    if (name == "s") {
      gen = 0;
    } else if (name.size() >= 2 && name[0] == 'a') {
      try {
        gen = std::stoi(name.substr(1));
      } catch (const std::exception&) {
        throw FormatError("bad braid token: " + tok);
      }
      if (gen < 1 || gen > 2 * genus) throw FormatError("braid generator out of range: " + tok);
    }
    if (gen < 0) throw FormatError("bad braid token: " + tok);
    letters.push_back({gen, exp});
  }
  return from_letters(genus, std::move(letters));
}

int delta(const BraidWord& w) {
  long long s = 0;
  for (const BraidLetter& l : w.letters())
    if (l.gen == 0) s += l.exp;
  return (s % 2 + 2) % 2 == 0 ? 1 : -1;
}

long long sigma_exponent(const BraidWord& w) {
  if (w.is_identity()) return 0;
  for (const BraidLetter& l : w.letters())
    if (l.gen != 0)
      throw DomainError("non-local braid word: contains " + braid_gen_name(l.gen));
  // Reduced, all letters are s: a single run remains.
  return w.letters()[0].exp;
}

std::string PureBraidWord::str() const {
  if (letters_.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const BraidLetter& l : letters_) {
    if (!first) os << ' ';
    first = false;
    if (l.gen == 0)
      os << 't';
    else if (l.gen <= 2 * genus_)
      os << 'a' << l.gen;
    else
      os << 'A' << (l.gen - 2 * genus_);
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

PureBraidWord PureBraidWord::from_letters(int genus, std::vector<BraidLetter> letters) {
  if (genus < 1) throw DomainError("pure braid words need genus >= 1");
  PureBraidWord w;
  w.genus_ = genus;
  for (const BraidLetter& l : letters)
    if (l.gen < 0 || l.gen > 4 * genus)
      throw DomainError("pure braid generator index out of range");
  w.letters_ = reduce(std::move(letters));
  return w;
}

BraidWord PureBraidWord::expand() const {
  std::vector<BraidLetter> out;
  for (const BraidLetter& l : letters_) {
    long long n = std::llabs(l.exp);
    int sign = l.exp > 0 ? 1 : -1;
    for (long long i = 0; i < n; ++i) {
      if (l.gen == 0) {
        out.push_back({0, 2 * sign});  // t = s^2
      } else if (l.gen <= 2 * genus_) {
        out.push_back({l.gen, static_cast<long long>(sign)});
      } else {
        int ai = l.gen - 2 * genus_;  // A_i = s^-1 a_i s^-1
        out.push_back({0, -sign});
        out.push_back({ai, static_cast<long long>(sign)});
        out.push_back({0, -sign});
      }
    }
  }
  return BraidWord::from_letters(genus_, std::move(out));
}

PureBraidWord to_pure_generators(const BraidWord& w) {
  if (delta(w) != 1)
    throw DomainError("to_pure_generators: odd braid word (delta = -1): " + w.str());
  const int g = w.genus();
  std::vector<BraidLetter> out;
  int state = 0;  // parity of the s-prefix consumed so far
  for (const BraidLetter& l : w.letters()) {
    long long n = std::llabs(l.exp);
    int sign = l.exp > 0 ? 1 : -1;
    for (long long i = 0; i < n; ++i) {
      if (l.gen != 0) {
        if (state == 0) {
          out.push_back({l.gen, static_cast<long long>(sign)});
        } else if (sign > 0) {
          // s a_i = (s^2)(s^-1 a_i s^-1) s = t A_i s
          out.push_back({0, 1});
          out.push_back({2 * g + l.gen, 1});
        } else {
          out.push_back({2 * g + l.gen, -1});
          out.push_back({0, -1});
        }
      } else if (sign > 0) {
        if (state == 1) out.push_back({0, 1});  // completed an s^2
        state ^= 1;
      } else {
        if (state == 0) out.push_back({0, -1});  // crossing back: s^-1 = t^-1 s
        state ^= 1;
      }
    }
  }
  return PureBraidWord::from_letters(g, std::move(out));
}

std::vector<BraidWord> relator_list(int genus) {
  if (genus < 1) throw DomainError("relator_list needs genus >= 1");
  const int n = 2 * genus;
  std::vector<BraidWord> rels;
  // s^-1 a_i s^-1 a_i = a_i s^-1 a_i s^-1
  for (int i = 1; i <= n; ++i)
    rels.push_back(BraidWord::from_letters(
        genus, {{0, -1}, {i, 1}, {0, -1}, {i, 1}, {0, 1}, {i, -1}, {0, 1}, {i, -1}}));
  // a_i s^-1 a_j = s a_j s^-1 a_i s, i < j
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      rels.push_back(BraidWord::from_letters(
          genus,
          {{i, 1}, {0, -1}, {j, 1}, {0, -1}, {i, -1}, {0, 1}, {j, -1}, {0, -1}}));
  // prod a_{2i-1} a_{2i}^-1 prod a_{2i-1}^-1 a_{2i} = s^2
  {
    std::vector<BraidLetter> word;
    for (int i = 1; i <= genus; ++i) {
      word.push_back({2 * i - 1, 1});
      word.push_back({2 * i, -1});
    }
    for (int i = 1; i <= genus; ++i) {
      word.push_back({2 * i - 1, -1});
      word.push_back({2 * i, 1});
    }
    word.push_back({0, -2});
    rels.push_back(BraidWord::from_letters(genus, std::move(word)));
  }
  // Pure-braid relators, expanded into {s, a_i}:
  // a_i A_i = A_i a_i
  for (int i = 1; i <= n; ++i) {
    PureBraidWord p = PureBraidWord::from_letters(
        genus, {{i, 1}, {n + i, 1}, {i, -1}, {n + i, -1}});
    rels.push_back(p.expand());
  }
  // a_i A_j = t A_j a_i, i < j
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      PureBraidWord p = PureBraidWord::from_letters(
          genus, {{i, 1}, {n + j, 1}, {i, -1}, {n + j, -1}, {0, -1}});
      rels.push_back(p.expand());
    }
  return rels;
}

}  // namespace braidhom
