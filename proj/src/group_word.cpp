#include "braidhom/group_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "braidhom/errors.hpp"

namespace braidhom {

namespace {

// Free reduction of (gen, exp) letter runs: merge equal neighbours, drop
// zero exponents, cascade.
std::vector<Letter> free_reduce(std::vector<Letter> in) {
  std::vector<Letter> out;
  for (const Letter& l : in) {
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

// Relator [a1,b1]...[ag,bg] in signed-letter encoding (+/-(index+1)).
std::vector<int> surface_relator(int genus) {
  std::vector<int> r;
  for (int i = 0; i < genus; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    r.push_back(a);
    r.push_back(b);
    r.push_back(-a);
    r.push_back(-b);
  }
  return r;
}

std::vector<int> invert_flat(const std::vector<int>& w) {
  std::vector<int> r;
  r.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) r.push_back(-w[i]);
  return r;
}

std::vector<int> free_reduce_flat(const std::vector<int>& w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

// All cyclic rotations of the relator and of its inverse. Built per call:
// cheap next to the matching scan, and keeps the reducer state-free.
std::vector<std::vector<int>> relator_rotations(int genus) {
  std::vector<std::vector<int>> rots;
  for (const std::vector<int>& base : {surface_relator(genus), invert_flat(surface_relator(genus))}) {
    for (std::size_t s = 0; s < base.size(); ++s) {
      std::vector<int> r;
      for (std::size_t i = 0; i < base.size(); ++i) r.push_back(base[(s + i) % base.size()]);
      rots.push_back(std::move(r));
    }
  }
  return rots;
}

std::vector<Letter> compress_flat(const std::vector<int>& flat) {
  std::vector<Letter> out;
  for (int l : flat) {
    int gen = std::abs(l) - 1;
    int e = l > 0 ? 1 : -1;
    if (!out.empty() && out.back().gen == gen)
      out.back().exp += e;
    else
      out.push_back({gen, e});
  }
  return free_reduce(out);
}

}  // namespace

std::vector<int> flatten_word(const GroupWord& w) {
  std::vector<int> flat;
  for (const Letter& l : w.letters()) {
    int s = l.exp > 0 ? l.gen + 1 : -(l.gen + 1);
    for (long long i = 0; i < std::llabs(l.exp); ++i) flat.push_back(s);
  }
  return flat;
}

std::vector<int> dehn_reduce_flat(int genus, std::vector<int> flat) {
  if (genus < 2) throw DomainError("Dehn reduction needs genus >= 2");
  const std::vector<std::vector<int>> rots = relator_rotations(genus);
  const std::size_t L = 4 * static_cast<std::size_t>(genus);
  const std::size_t half = L / 2;  // subwords of length > half get replaced
  flat = free_reduce_flat(flat);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos < flat.size() && !changed; ++pos) {
      for (const std::vector<int>& rot : rots) {
        std::size_t match = 0;
        while (match < L && pos + match < flat.size() && flat[pos + match] == rot[match]) ++match;
        if (match > half) {
          // rot = matched . rest with rot == 1, so matched == rest^{-1}.
          std::vector<int> repl;
          repl.insert(repl.end(), flat.begin(), flat.begin() + pos);
          for (std::size_t i = L; i-- > match;) repl.push_back(-rot[i]);
          repl.insert(repl.end(), flat.begin() + pos + match, flat.end());
          flat = free_reduce_flat(repl);
          changed = true;
          break;
        }
      }
    }
  }
  return flat;
}

bool surface_word_is_trivial(int genus, const std::vector<int>& flat) {
  return dehn_reduce_flat(genus, flat).empty();
}

GroupWord GroupWord::identity(GroupKind kind, int rank) {
  GroupWord w;
  w.kind_ = kind;
  w.rank_ = kind == GroupKind::torus ? 2 : rank;
  if (kind == GroupKind::surface && rank < 2)
    throw DomainError("surface words need genus >= 2");
  if (kind == GroupKind::free_group && rank < 1)
    throw DomainError("free group words need rank >= 1");
  return w;
}

GroupWord GroupWord::torus_word(long long m, long long n) {
  GroupWord w = identity(GroupKind::torus, 2);
  w.tm_ = m;
  w.tn_ = n;
  return w;
}

GroupWord GroupWord::from_letters(GroupKind kind, int rank, std::vector<Letter> letters) {
  if (kind == GroupKind::torus) {
    GroupWord w = identity(kind, 2);
    for (const Letter& l : letters) {
      if (l.gen == 0)
        w.tm_ += l.exp;
      else if (l.gen == 1)
        w.tn_ += l.exp;
      else
        throw DomainError("torus words have two generators");
    }
    return w;
  }
  GroupWord w = identity(kind, rank);
  for (const Letter& l : letters)
    if (l.gen < 0 || l.gen >= w.generator_count())
      throw DomainError("generator index out of range: " + std::to_string(l.gen));
  w.letters_ = free_reduce(std::move(letters));
  if (kind == GroupKind::surface) {
    std::vector<int> flat = flatten_word(w);
    w.letters_ = compress_flat(dehn_reduce_flat(rank, std::move(flat)));
  }
  return w;
}

int GroupWord::generator_count() const {
  switch (kind_) {
    case GroupKind::free_group: return rank_;
    case GroupKind::torus: return 2;
    case GroupKind::surface: return 2 * rank_;
  }
  return 0;
}

bool GroupWord::is_identity() const {
  if (kind_ == GroupKind::torus) return tm_ == 0 && tn_ == 0;
  return letters_.empty();
}

long long GroupWord::length() const {
  if (kind_ == GroupKind::torus) return std::llabs(tm_) + std::llabs(tn_);
  long long n = 0;
  for (const Letter& l : letters_) n += std::llabs(l.exp);
  return n;
}

GroupWord GroupWord::inverse() const {
  if (kind_ == GroupKind::torus) return torus_word(-tm_, -tn_);
  std::vector<Letter> rev;
  rev.reserve(letters_.size());
  for (std::size_t i = letters_.size(); i-- > 0;) rev.push_back({letters_[i].gen, -letters_[i].exp});
  return from_letters(kind_, rank_, std::move(rev));
}

std::vector<long long> GroupWord::abelianization() const {
  std::vector<long long> sums(generator_count(), 0);
  if (kind_ == GroupKind::torus) {
    sums[0] = tm_;
    sums[1] = tn_;
    return sums;
  }
  for (const Letter& l : letters_) sums[l.gen] += l.exp;
  return sums;
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
  if (u.kind_ != v.kind_ || u.rank_ != v.rank_)
    throw DomainError("word_multiply: mismatched group kinds");
  if (u.kind_ == GroupKind::torus) return GroupWord::torus_word(u.tm_ + v.tm_, u.tn_ + v.tn_);
  std::vector<Letter> cat = u.letters_;
  cat.insert(cat.end(), v.letters_.begin(), v.letters_.end());
  return GroupWord::from_letters(u.kind_, u.rank_, std::move(cat));
}

std::string generator_name(GroupKind kind, int idx) {
  switch (kind) {
    case GroupKind::free_group:
      return "a" + std::to_string(idx + 1);
    case GroupKind::torus:
      return idx == 0 ? "u" : "v";
    case GroupKind::surface:
      return (idx % 2 == 0 ? "a" : "b") + std::to_string(idx / 2 + 1);
  }
  return "?";
}

namespace {

std::string render(const GroupWord& w, const char* sep) {
  if (w.is_identity()) return "e";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& name, long long exp) {
    if (exp == 0) return;
    if (!first) os << sep;
    first = false;
    os << name;
    if (exp != 1) os << '^' << exp;
  };
  if (w.kind() == GroupKind::torus) {
    emit("u", w.torus_exponents().first);
    emit("v", w.torus_exponents().second);
  } else {
    for (const Letter& l : w.letters()) emit(generator_name(w.kind(), l.gen), l.exp);
  }
  return os.str();
}

}  // namespace

std::string GroupWord::str() const { return render(*this, " "); }
std::string GroupWord::compact() const { return render(*this, "."); }

bool GroupWord::operator==(const GroupWord& o) const {
  return kind_ == o.kind_ && rank_ == o.rank_ && letters_ == o.letters_ && tm_ == o.tm_ &&
         tn_ == o.tn_;
}

bool GroupWord::operator<(const GroupWord& o) const {
  long long la = length(), lb = o.length();
  if (la != lb) return la < lb;
  return compact() < o.compact();
}

GroupWord GroupWord::parse(GroupKind kind, int rank, std::string_view text) {
  std::vector<Letter> letters;
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
        throw FormatError("bad exponent in word token: " + tok);
      }
    }
    int gen = -1;
    if (kind == GroupKind::torus) {
      if (name == "u")
        gen = 0;
      else if (name == "v")
        gen = 1;
    } else if (name.size() >= 2 && (name[0] == 'a' || name[0] == 'b')) {
      int i = 0;
      try {
        i = std::stoi(name.substr(1));
      } catch (const std::exception&) {
        throw FormatError("bad generator token: " + tok);
      }
      if (i >= 1) {
        if (kind == GroupKind::free_group && name[0] == 'a')
          gen = i - 1;
        else if (kind == GroupKind::surface)
          gen = 2 * (i - 1) + (name[0] == 'b' ? 1 : 0);
      }
    }
    if (gen < 0) throw FormatError("bad generator token: " + tok);
    letters.push_back({gen, exp});
  }
  return from_letters(kind, rank, std::move(letters));
}

}  // namespace braidhom
