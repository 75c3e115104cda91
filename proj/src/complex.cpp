#include "braidhom/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "braidhom/errors.hpp"

namespace braidhom {

std::string tier_str(GeneratorTier t) {
  switch (t) {
    case GeneratorTier::c0: return "c0";
    case GeneratorTier::cminus: return "c-";
    case GeneratorTier::cplus: return "c+";
  }
  return "?";
}

std::string generator_label(GeneratorTier tier, const GroupWord& gamma) {
  return tier_str(tier) + "[" + gamma.compact() + "]";
}

ChainComplex::ChainComplex(std::string name, std::vector<ChordGenerator> basis,
                           std::map<std::string, BimoduleElement> diff)
    : name_(std::move(name)), basis_(std::move(basis)), diff_(std::move(diff)) {
  std::map<std::string, const ChordGenerator*> by_label;
  for (const ChordGenerator& g : basis_)
    if (!by_label.emplace(g.label, &g).second)
      throw DomainError("ChainComplex: duplicate generator label " + g.label);
  for (const ChordGenerator& g : basis_) diff_.try_emplace(g.label);
  for (const auto& [label, img] : diff_) {
    auto src = by_label.find(label);
    if (src == by_label.end())
      throw DomainError("ChainComplex: differential of unknown generator " + label);
    for (const auto& [tl, poly] : img.terms()) {
      auto tgt = by_label.find(tl);
      if (tgt == by_label.end())
        throw DomainError("ChainComplex: differential hits unknown generator " + tl);
      if (tgt->second->degree != src->second->degree - 1)
        throw DomainError("ChainComplex: differential does not lower degree by one at " + label);
      if (!(tgt->second->gamma == src->second->gamma))
        throw DomainError("ChainComplex: differential leaves the homotopy class at " + label);
    }
  }
}

const ChordGenerator* ChainComplex::find_generator(const std::string& label) const {
  for (const ChordGenerator& g : basis_)
    if (g.label == label) return &g;
  return nullptr;
}

const BimoduleElement& ChainComplex::differential(const std::string& label) const {
  auto it = diff_.find(label);
  if (it == diff_.end()) throw DomainError("no generator " + label);
  return it->second;
}

BimoduleElement ChainComplex::apply_differential(const BimoduleElement& x) const {
  BimoduleElement out;
  for (const auto& [label, poly] : x.terms()) out += differential(label).scaled_poly(poly);
  return out;
}

std::vector<std::pair<std::string, BimoduleElement>> ChainComplex::d_squared_report() const {
  std::vector<std::pair<std::string, BimoduleElement>> bad;
  for (const ChordGenerator& g : basis_) {
    BimoduleElement dd = apply_differential(differential(g.label));
    if (!dd.is_zero()) bad.emplace_back(g.label, std::move(dd));
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

void check_unique(const std::vector<Chord>& chords) {
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j)
      if (chords[i].gamma == chords[j].gamma)
        throw DomainError("duplicate chord class " + chords[i].gamma.str());
}

}  // namespace

ChainComplex build_cylindrical(const std::vector<Chord>& chords) {
  check_unique(chords);
  std::vector<ChordGenerator> basis;
  for (const Chord& c : chords)
    basis.push_back({generator_label(GeneratorTier::c0, c.gamma), c.gamma, GeneratorTier::c0, 0});
  return ChainComplex("cylindrical", std::move(basis), {});
}

ChainComplex build_wrapped(const std::vector<Chord>& chords, long long k) {
  check_unique(chords);
  std::vector<ChordGenerator> basis;
  std::map<std::string, BimoduleElement> diff;
  for (const Chord& c : chords) {
    std::string l0 = generator_label(GeneratorTier::c0, c.gamma);
    std::string lm = generator_label(GeneratorTier::cminus, c.gamma);
    std::string lp = generator_label(GeneratorTier::cplus, c.gamma);
    basis.push_back({l0, c.gamma, GeneratorTier::c0, 0});
    basis.push_back({lm, c.gamma, GeneratorTier::cminus, 1});
    basis.push_back({lp, c.gamma, GeneratorTier::cplus, 1});
    diff[lm] = BimoduleElement::generator(l0);
    diff[lp] = bimodule_act({-k, 0}, BimoduleElement::generator(l0), {0, k});
  }
  return ChainComplex("wrapped k=" + std::to_string(k), std::move(basis), std::move(diff));
}

ChainComplex build_wrapped_morse(const std::vector<Chord>& chords, const MorseParams& params) {
  MorseProblem mp(params);
  std::vector<CriticalPoint> cps = mp.find_critical_points();

  int n_interior = 0, n_minus = 0, n_plus = 0;
  std::size_t i0 = 0, im = 0, ip = 0;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    switch (cps[i].tier) {
      case Tier::interior: ++n_interior; i0 = i; break;
      case Tier::ext_minus: ++n_minus; im = i; break;
      case Tier::ext_plus: ++n_plus; ip = i; break;
    }
  }
  if (cps.size() != 3 || n_interior != 1 || n_minus != 1 || n_plus != 1 ||
      cps[i0].index != 1 || cps[im].index != 2 || cps[ip].index != 2)
    throw NumericalError(
        "build_wrapped_morse: critical point census is not the expected pattern "
        "(one interior saddle, two exterior maxima)");

  auto trajectories = mp.all_rigid_trajectories(cps);

  auto differential_coeff = [&](std::size_t src) {
    LaurentPoly sum;
    auto it = trajectories.find({src, i0});
    if (it == trajectories.end()) return sum;
    for (const Trajectory& t : it->second) {
      LaurentBimonomial m = winding_to_coefficient(t);
      sum += LaurentPoly(BigInt(1), m);
    }
    return sum;
  };
  LaurentPoly coeff_minus = differential_coeff(im);
  LaurentPoly coeff_plus = differential_coeff(ip);

  check_unique(chords);
  std::vector<ChordGenerator> basis;
  std::map<std::string, BimoduleElement> diff;
  for (const Chord& c : chords) {
    std::string l0 = generator_label(GeneratorTier::c0, c.gamma);
    std::string lm = generator_label(GeneratorTier::cminus, c.gamma);
    std::string lp = generator_label(GeneratorTier::cplus, c.gamma);
    basis.push_back({l0, c.gamma, GeneratorTier::c0, 0});
    basis.push_back({lm, c.gamma, GeneratorTier::cminus, 1});
    basis.push_back({lp, c.gamma, GeneratorTier::cplus, 1});
    diff[lm] = BimoduleElement::single(l0, coeff_minus);
    diff[lp] = BimoduleElement::single(l0, coeff_plus);
  }
  ChainComplex numeric("wrapped k=" + std::to_string(params.k), std::move(basis),
                       std::move(diff));

  ChainComplex symbolic = build_wrapped(chords, params.k);
  for (const ChordGenerator& g : symbolic.basis()) {
    if (!(numeric.differential(g.label) == symbolic.differential(g.label))) {
      std::ostringstream os;
      os << "build_wrapped_morse: numeric differential disagrees with the symbolic one\n"
         << "--- numeric ---\n"
         << numeric.serialize() << "--- symbolic ---\n"
         << symbolic.serialize();
      throw NumericalError(os.str());
    }
  }
  return numeric;
}

ChainComplex quotient_exterior(const ChainComplex& total, const ChainComplex& sub) {
  std::set<std::string> sub_labels;
  for (const ChordGenerator& g : sub.basis()) {
    const ChordGenerator* t = total.find_generator(g.label);
    if (t == nullptr || t->degree != g.degree || !(t->gamma == g.gamma))
      throw DomainError("quotient_exterior: subcomplex basis is not part of the total basis: " +
                        g.label);
    sub_labels.insert(g.label);
  }
  for (const std::string& l : sub_labels)
    for (const auto& [tl, poly] : total.differential(l).terms())
      if (!sub_labels.count(tl))
        throw DomainError("quotient_exterior: subcomplex is not closed under the differential at " +
                          l);
  std::vector<ChordGenerator> basis;
  std::map<std::string, BimoduleElement> diff;
  for (const ChordGenerator& g : total.basis()) {
    if (sub_labels.count(g.label)) continue;
    basis.push_back(g);
    BimoduleElement img;
    for (const auto& [tl, poly] : total.differential(g.label).terms())
      if (!sub_labels.count(tl)) img += BimoduleElement::single(tl, poly);
    diff[g.label] = std::move(img);
  }
  return ChainComplex("exterior of " + total.name(), std::move(basis), std::move(diff));
}

// ---------------------------------------------------------------------------
// Unit-pivot linear algebra over ℤ[μ_x^{±1}, μ_y^{±1}]

namespace {

// Staircase basis of a span: every row keeps a designated ±monomial pivot
// and vanishes at the pivots of the other rows. Requires the span to
// admit such a basis; otherwise the input is outside the supported class.
class UnitPivotBasis {
 public:
  explicit UnitPivotBasis(const std::vector<BimoduleElement>& gens) {
    for (const BimoduleElement& g : gens) insert(g);
  }

  BimoduleElement reduce(BimoduleElement x) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const LaurentPoly* c = x.coefficient(pivot_label_[i]);
      if (c != nullptr) x -= rows_[i].scaled_poly(*c * pivot_inv_[i]);
    }
    return x;
  }

  bool contains(const BimoduleElement& x) const { return reduce(x).is_zero(); }
  const std::vector<BimoduleElement>& rows() const { return rows_; }

 private:
  std::vector<BimoduleElement> rows_;
  std::vector<std::string> pivot_label_;
  std::vector<LaurentPoly> pivot_inv_;

  void insert(const BimoduleElement& g) {
    BimoduleElement r = reduce(g);
    if (r.is_zero()) return;
    // Find a unit coefficient to pivot on.
    for (const auto& [label, poly] : r.terms()) {
      if (!poly.is_unit_monomial()) continue;
      LaurentPoly inv = poly.unit_inverse();
      // Clear this label from the existing rows to keep the staircase.
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const LaurentPoly* c = rows_[i].coefficient(label);
        if (c != nullptr) rows_[i] -= r.scaled_poly(*c * inv);
      }
      rows_.push_back(r);
      pivot_label_.push_back(label);
      pivot_inv_.push_back(inv);
      return;
    }
    throw UnsupportedError(
        "unit-pivot elimination: residual row has no ±monomial coefficient "
        "(out of supported class)");
  }
};

// Kernel of the row system: combinations over the first n_main rows (the
// remaining rows are helpers whose coefficients are discarded). Returns
// coefficient vectors of length n_main.
std::vector<std::vector<LaurentPoly>> kernel_combinations(std::vector<BimoduleElement> rows,
                                                          std::size_t n_main) {
  std::size_t n = rows.size();
  std::vector<std::vector<LaurentPoly>> tracker(n, std::vector<LaurentPoly>(n_main));
  for (std::size_t i = 0; i < n_main; ++i) tracker[i][i] = LaurentPoly::unit();

  std::vector<char> active(n, 1);
  for (;;) {
    // Pick the first active row with a unit coefficient.
    std::size_t piv = n;
    std::string piv_label;
    LaurentPoly piv_inv;
    bool nonzero_active = false;
    for (std::size_t i = 0; i < n && piv == n; ++i) {
      if (!active[i] || rows[i].is_zero()) continue;
      nonzero_active = true;
      for (const auto& [label, poly] : rows[i].terms()) {
        if (poly.is_unit_monomial()) {
          piv = i;
          piv_label = label;
          piv_inv = poly.unit_inverse();
          break;
        }
      }
    }
    if (piv == n) {
      if (nonzero_active)
        throw UnsupportedError(
            "unit-pivot elimination: no unit pivot left (out of supported class)");
      break;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == piv) continue;
      const LaurentPoly* c = rows[r].coefficient(piv_label);
      if (c == nullptr) continue;
      LaurentPoly q = *c * piv_inv;
      rows[r] -= rows[piv].scaled_poly(q);
      for (std::size_t j = 0; j < n_main; ++j) tracker[r][j] -= tracker[piv][j] * q;
    }
    active[piv] = 0;
  }

  std::vector<std::vector<LaurentPoly>> kernel;
  for (std::size_t i = 0; i < n; ++i)
    if (active[i] && rows[i].is_zero()) kernel.push_back(std::move(tracker[i]));
  return kernel;
}

struct BlockHomology {
  std::vector<BimoduleElement> gens;        // homology generators (chains)
  std::vector<BimoduleElement> boundaries;  // image of the next differential
};

std::vector<const ChordGenerator*> block_basis(const ChainComplex& c, const GroupWord& gamma,
                                               int degree) {
  std::vector<const ChordGenerator*> out;
  for (const ChordGenerator& g : c.basis())
    if (g.degree == degree && g.gamma == gamma) out.push_back(&g);
  return out;
}

BlockHomology block_homology(const ChainComplex& c, const GroupWord& gamma, int degree) {
  BlockHomology out;
  std::vector<const ChordGenerator*> gens = block_basis(c, gamma, degree);
  std::vector<const ChordGenerator*> above = block_basis(c, gamma, degree + 1);
  for (const ChordGenerator* g : above) {
    const BimoduleElement& b = c.differential(g->label);
    if (!b.is_zero()) out.boundaries.push_back(b);
  }
  if (gens.empty()) return out;

  std::vector<BimoduleElement> rows;
  for (const ChordGenerator* g : gens) rows.push_back(c.differential(g->label));
  std::vector<std::vector<LaurentPoly>> combos = kernel_combinations(rows, rows.size());

  std::vector<BimoduleElement> cycle_gens;
  for (const auto& combo : combos) {
    BimoduleElement z;
    for (std::size_t i = 0; i < combo.size(); ++i)
      z += BimoduleElement::single(gens[i]->label, combo[i]);
    if (!z.is_zero()) cycle_gens.push_back(std::move(z));
  }
  if (out.boundaries.empty()) {
    out.gens = std::move(cycle_gens);
    return out;
  }
  UnitPivotBasis bd(out.boundaries);
  for (BimoduleElement& z : cycle_gens) {
    BimoduleElement r = bd.reduce(z);
    if (!r.is_zero()) out.gens.push_back(std::move(r));
  }
  return out;
}

std::vector<GroupWord> gamma_classes(const ChainComplex& c) {
  std::vector<GroupWord> out;
  for (const ChordGenerator& g : c.basis()) {
    bool seen = false;
    for (const GroupWord& w : out) seen |= w == g.gamma;
    if (!seen) out.push_back(g.gamma);
  }
  return out;
}

}  // namespace

std::vector<HomologySummand> homology_unit_pivot(const ChainComplex& c) {
  std::vector<HomologySummand> out;
  int dmin = 0, dmax = 0;
  for (const ChordGenerator& g : c.basis()) {
    dmin = std::min(dmin, g.degree);
    dmax = std::max(dmax, g.degree);
  }
  for (const GroupWord& gamma : gamma_classes(c)) {
    for (int d = dmin; d <= dmax; ++d) {
      BlockHomology h = block_homology(c, gamma, d);
      if (!h.gens.empty()) out.push_back({gamma, d, std::move(h.gens)});
    }
  }
  return out;
}

TrianglePackage build_triangle(const std::vector<Chord>& chords, long long k) {
  TrianglePackage t;
  t.total = build_wrapped(chords, k);
  t.sub = build_cylindrical(chords);
  t.quotient = quotient_exterior(t.total, t.sub);
  for (const ChordGenerator& g : t.quotient.basis()) {
    BimoduleElement crossing;
    for (const auto& [tl, poly] : t.total.differential(g.label).terms())
      if (t.sub.find_generator(tl) != nullptr) crossing += BimoduleElement::single(tl, poly);
    t.connecting[g.label] = std::move(crossing);
  }
  return t;
}

namespace {

BimoduleElement project_off_sub(const ChainComplex& sub, const BimoduleElement& x) {
  BimoduleElement out;
  for (const auto& [label, poly] : x.terms())
    if (sub.find_generator(label) == nullptr) out += BimoduleElement::single(label, poly);
  return out;
}

BimoduleElement restrict_to_sub(const ChainComplex& sub, const BimoduleElement& x,
                                bool* in_sub = nullptr) {
  BimoduleElement out;
  bool ok = true;
  for (const auto& [label, poly] : x.terms()) {
    if (sub.find_generator(label) != nullptr)
      out += BimoduleElement::single(label, poly);
    else
      ok = false;
  }
  if (in_sub != nullptr) *in_sub = ok;
  return out;
}

}  // namespace

ExactnessReport verify_exactness(const TrianglePackage& t) {
  ExactnessReport report;
  auto issue = [&](const GroupWord& gamma, int degree, const std::string& pos,
                   const std::string& detail) {
    report.exact = false;
    report.issues.push_back({gamma, degree, pos, detail});
  };

  // Chain-level maps of the short exact sequence.
  auto iota = [](const BimoduleElement& x) { return x; };
  auto pi = [&](const BimoduleElement& x) { return project_off_sub(t.sub, x); };
  auto delta = [&](const BimoduleElement& x, const GroupWord& gamma, int degree) {
    BimoduleElement img = t.total.apply_differential(x);
    bool in_sub = false;
    BimoduleElement r = restrict_to_sub(t.sub, img, &in_sub);
    if (!in_sub)
      issue(gamma, degree, "quotient", "connecting image of a cycle leaves the subcomplex");
    return r;
  };

  int dmin = 0, dmax = 0;
  for (const ChordGenerator& g : t.total.basis()) {
    dmin = std::min(dmin, g.degree);
    dmax = std::max(dmax, g.degree);
  }

  for (const GroupWord& gamma : gamma_classes(t.total)) {
    std::map<int, BlockHomology> hsub, htot, hquot;
    for (int d = dmin - 1; d <= dmax + 1; ++d) {
      hsub[d] = block_homology(t.sub, gamma, d);
      htot[d] = block_homology(t.total, gamma, d);
      hquot[d] = block_homology(t.quotient, gamma, d);
    }

    // One exactness position: ker(g) = im(f) inside H(X), where f comes
    // from A.gens via `fmap` and g maps X-chains into the complex carrying
    // Y (modulo Y.boundaries).
    auto check_position = [&](const char* pos, int degree, const BlockHomology& A,
                              auto&& fmap, const BlockHomology& X, auto&& gmap,
                              const BlockHomology& Y) {
      std::vector<BimoduleElement> fimg;
      for (const BimoduleElement& a : A.gens) fimg.push_back(fmap(a));

      // im ⊆ ker: g(f(a)) must be a boundary in Y.
      UnitPivotBasis ybd(Y.boundaries);
      for (std::size_t i = 0; i < fimg.size(); ++i)
        if (!ybd.contains(gmap(fimg[i])))
          issue(gamma, degree, pos, "composite of consecutive maps is nonzero in homology");

      // ker ⊆ im: kernel of the induced map on H(X), modulo boundaries.
      if (X.gens.empty()) return;
      std::vector<BimoduleElement> rows;
      for (const BimoduleElement& x : X.gens) rows.push_back(gmap(x));
      std::size_t n_main = rows.size();
      for (const BimoduleElement& b : Y.boundaries) rows.push_back(b);
      std::vector<BimoduleElement> image_span = fimg;
      image_span.insert(image_span.end(), X.boundaries.begin(), X.boundaries.end());
      UnitPivotBasis img(image_span);
      for (const auto& combo : kernel_combinations(rows, n_main)) {
        BimoduleElement z;
        for (std::size_t i = 0; i < n_main; ++i) z += X.gens[i].scaled_poly(combo[i]);
        if (z.is_zero()) continue;
        if (!img.contains(z))
          issue(gamma, degree, pos, "kernel element is not hit by the previous map");
      }
    };

    for (int d = dmin; d <= dmax; ++d) {
      // At H_d(total): sub -> total -> quotient.
      check_position("total", d, hsub[d], iota, htot[d], pi, hquot[d]);
      // At H_d(quotient): total -> quotient -> sub[-1].
      check_position("quotient", d, htot[d], pi, hquot[d],
                     [&](const BimoduleElement& x) { return delta(x, gamma, d); }, hsub[d - 1]);
      // At H_d(sub): quotient[+1] -> sub -> total.
      check_position("sub", d, hquot[d + 1],
                     [&](const BimoduleElement& x) { return delta(x, gamma, d + 1); }, hsub[d],
                     iota, htot[d]);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialization (see docs/formats.md)

namespace {

std::string group_kind_str(GroupKind k) {
  switch (k) {
    case GroupKind::free_group: return "free";
    case GroupKind::torus: return "torus";
    case GroupKind::surface: return "surface";
  }
  return "?";
}

GroupWord parse_compact_word(GroupKind kind, int rank, std::string s) {
  for (char& ch : s)
    if (ch == '.') ch = ' ';
  return GroupWord::parse(kind, rank, s);
}

}  // namespace

std::string ChainComplex::serialize(bool mod2) const {
  std::ostringstream os;
  os << "# braidhom v1 complex\n";
  os << "name " << name_ << "\n";
  if (basis_.empty())
    os << "group none 0\n";
  else
    os << "group " << group_kind_str(basis_[0].gamma.kind()) << ' ' << basis_[0].gamma.rank()
       << "\n";
  os << "coefficients " << (mod2 ? "Z2" : "Z") << "\n";
  os << "basis " << basis_.size() << "\n";
  for (const ChordGenerator& g : basis_)
    os << "gen " << g.label << " gamma " << g.gamma.compact() << " tier " << tier_str(g.tier)
       << " degree " << g.degree << "\n";
  for (const ChordGenerator& g : basis_) {
    const BimoduleElement& d = diff_.at(g.label);
    os << "diff " << g.label << " -> " << (mod2 ? d.mod2() : d).str() << "\n";
  }
  os << "end\n";
  return os.str();
}

ChainComplex ChainComplex::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "# braidhom v1 complex")
    throw FormatError("complex document: bad header line");
  std::string name;
  GroupKind kind = GroupKind::torus;
  int rank = 0;
  bool have_group = false;
  std::size_t n_basis = 0;
  std::vector<ChordGenerator> basis;
  std::map<std::string, BimoduleElement> diff;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "end") break;
    if (key == "name") {
      std::getline(ls, name);
      if (!name.empty() && name[0] == ' ') name.erase(0, 1);
    } else if (key == "group") {
      std::string k;
      ls >> k >> rank;
      if (k == "none") {
        have_group = false;
      } else if (k == "free") {
        kind = GroupKind::free_group;
        have_group = true;
      } else if (k == "torus") {
        kind = GroupKind::torus;
        have_group = true;
      } else if (k == "surface") {
        kind = GroupKind::surface;
        have_group = true;
      } else {
        throw FormatError("complex document: bad group line: " + line);
      }
    } else if (key == "coefficients") {
      // informational
    } else if (key == "basis") {
      ls >> n_basis;
    } else if (key == "gen") {
      if (!have_group) throw FormatError("complex document: gen before group line");
      std::string label, kw1, gword, kw2, tier, kw3;
      int degree = 0;
      ls >> label >> kw1 >> gword >> kw2 >> tier >> kw3 >> degree;
      if (kw1 != "gamma" || kw2 != "tier" || kw3 != "degree")
        throw FormatError("complex document: bad gen line: " + line);
      ChordGenerator g;
      g.gamma = parse_compact_word(kind, rank, gword);
      g.tier = tier == "c0" ? GeneratorTier::c0
                            : (tier == "c-" ? GeneratorTier::cminus : GeneratorTier::cplus);
      g.degree = degree;
      g.label = label;
      if (label != generator_label(g.tier, g.gamma))
        throw FormatError("complex document: label does not match tier/gamma: " + line);
      basis.push_back(std::move(g));
    } else if (key == "diff") {
      std::string label, arrow, rest;
      ls >> label >> arrow;
      if (arrow != "->") throw FormatError("complex document: bad diff line: " + line);
      std::getline(ls, rest);
      diff[label] = BimoduleElement::parse(rest);
    } else {
      throw FormatError("complex document: unexpected line: " + line);
    }
  }
  if (basis.size() != n_basis)
    throw FormatError("complex document: basis count mismatch");
  return ChainComplex(name, std::move(basis), std::move(diff));
}

}  // namespace braidhom
