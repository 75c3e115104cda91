// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion. Usage:
//   acceptance <path-to-braidhom-cli> <scratch-dir>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "braidhom/braid.hpp"
#include "braidhom/chords.hpp"
#include "braidhom/complex.hpp"
#include "braidhom/errors.hpp"
#include "braidhom/invariant.hpp"
#include "braidhom/morse.hpp"

using namespace braidhom;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

MorseParams defaults_with_k(long long k) {
  MorseParams p;  // U=5, eps0=0.1, eps1=0.5, 200x64 seeds, n_fan=720
  p.k = k;
  return p;
}

std::vector<Chord> standard_chords() {
  return enumerate_chords(SurfaceSpec::torus(0.3, 0.0), 1.5);
}

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    pass = false;
    if (!note.empty()) note += "; ";
    note += why;
  }
};

// --------------------------------------------------------------------------
// 1. Critical-point census

Outcome criterion1() {
  Outcome out;
  for (long long k = -2; k <= 3; ++k) {
    auto t0 = std::chrono::steady_clock::now();
    MorseParams p = defaults_with_k(k);
    MorseProblem mp(p);
    std::vector<CriticalPoint> cps = mp.find_critical_points();
    if (cps.size() != 3) {
      out.fail("k=" + std::to_string(k) + ": " + std::to_string(cps.size()) + " positive points");
      continue;
    }
    for (const CriticalPoint& cp : cps) {
      int want = cp.tier == Tier::interior ? 1 : 2;
      if (cp.index != want) out.fail("k=" + std::to_string(k) + ": wrong index");
      if (!(cp.value > 0)) out.fail("k=" + std::to_string(k) + ": non-positive value");
    }
    MorseParams dbl = p;
    dbl.seeds_a *= 2;
    dbl.seeds_theta *= 2;
    std::vector<CriticalPoint> cps2 = MorseProblem(dbl).find_critical_points();
    if (cps2.size() != cps.size()) {
      out.fail("k=" + std::to_string(k) + ": census changes under seed doubling");
    } else {
      for (std::size_t i = 0; i < cps.size(); ++i) {
        double move = std::hypot(cps[i].a - cps2[i].a,
                                 std::remainder(cps[i].theta - cps2[i].theta, 2 * kPi));
        if (move >= 1e-3)
          out.fail("k=" + std::to_string(k) + ": position unstable under seed doubling");
      }
    }
    double dt = seconds_since(t0);
    if (dt >= 10.0) out.fail("k=" + std::to_string(k) + ": census runtime " + std::to_string(dt));
  }
  return out;
}

// --------------------------------------------------------------------------
// 2. Rigid trajectory counts

Outcome criterion2() {
  Outcome out;
  for (long long k = -2; k <= 3; ++k) {
    auto t0 = std::chrono::steady_clock::now();
    MorseParams p = defaults_with_k(k);
    MorseProblem mp(p);
    std::vector<CriticalPoint> cps = mp.find_critical_points();
    auto count_pairs = [&](const MorseProblem& problem) {
      std::map<std::pair<Tier, Tier>, std::size_t> counts;
      for (auto& [key, trs] : problem.all_rigid_trajectories(cps))
        counts[{cps[key.first].tier, cps[key.second].tier}] = trs.size();
      return counts;
    };
    auto counts = count_pairs(mp);
    if (counts[{Tier::ext_minus, Tier::interior}] != 1)
      out.fail("k=" + std::to_string(k) + ": c- -> c0 count != 1");
    if (counts[{Tier::ext_plus, Tier::interior}] != 1)
      out.fail("k=" + std::to_string(k) + ": c+ -> c0 count != 1");

    MorseParams dbl = p;
    dbl.n_fan *= 2;
    if (count_pairs(MorseProblem(dbl)) != counts)
      out.fail("k=" + std::to_string(k) + ": counts change under fan doubling");
    double dt = seconds_since(t0);
    if (dt >= 30.0)
      out.fail("k=" + std::to_string(k) + ": trajectory runtime " + std::to_string(dt));
  }
  return out;
}

// --------------------------------------------------------------------------
// 3. Differential reproduction (morse mode == symbolic, exact)

Outcome criterion3() {
  Outcome out;
  std::vector<Chord> chords = standard_chords();
  for (long long k = -2; k <= 3; ++k) {
    try {
      ChainComplex numeric = build_wrapped_morse(chords, defaults_with_k(k));
      ChainComplex symbolic = build_wrapped(chords, k);
      for (const ChordGenerator& g : symbolic.basis())
        if (!(numeric.differential(g.label) == symbolic.differential(g.label)))
          out.fail("k=" + std::to_string(k) + ": differential mismatch at " + g.label);
      if (numeric.serialize() != symbolic.serialize())
        out.fail("k=" + std::to_string(k) + ": serialization differs");
    } catch (const Error& e) {
      out.fail("k=" + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// 4. Gradient check under parameter perturbation

Outcome criterion4() {
  Outcome out;
  std::mt19937 rng(20240615);
  std::uniform_real_distribution<double> pert(0.8, 1.2);
  for (int trial = 0; trial < 5; ++trial) {
    MorseParams p = defaults_with_k(1);
    p.U *= pert(rng);
    p.eps0 *= pert(rng);
    p.eps1 *= pert(rng);
    p.softening *= pert(rng);
    p.onset *= pert(rng);
    MorseProblem mp(p);
    double A = p.U + p.x_max();
    std::uniform_real_distribution<double> da(-A, A), dt(0.0, 2 * kPi);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      double a = da(rng), th = dt(rng);
      auto g = mp.eval_grad(a, th);
      const double h = 1e-5;
      double fa = (mp.eval_h(a + h, th) - mp.eval_h(a - h, th)) / (2 * h);
      double ft = (mp.eval_h(a, th + h) - mp.eval_h(a, th - h)) / (2 * h);
      double denom = 1.0 + std::hypot(g[0], g[1]);
      if (std::hypot(g[0] - fa, g[1] - ft) / denom >= 1e-6) ++bad;
    }
    if (bad > 0)
      out.fail("perturbation " + std::to_string(trial) + ": " + std::to_string(bad) +
               " points exceed 1e-6");
  }
  return out;
}

// --------------------------------------------------------------------------
// 5. Homological suite

// Sparse integer Gaussian elimination; kernel basis of the constraint
// matrix rows. Independent of the unit-pivot Laurent machinery.
std::vector<std::vector<long long>> integer_kernel(
    const std::vector<std::map<int, long long>>& rows, int n_cols) {
  std::vector<std::map<int, long long>> work = rows;
  std::vector<int> pivot_col_of_row;
  std::set<int> pivot_cols;
  for (auto& row : work) {
    // Reduce against existing pivots.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        int pc = pivot_col_of_row[r];
        auto it = row.find(pc);
        if (it == row.end() || it->second == 0) continue;
        long long lead = work[r].at(pc);
        long long c = it->second;
        if (c % lead != 0) {
          // Scale the row to make the entry divisible (exact arithmetic).
          long long g = std::abs(lead);
          for (auto& [col, v] : row) v *= g;
          c = row.at(pc);
        }
        long long q = c / lead;
        for (const auto& [col, v] : work[r]) {
          row[col] -= q * v;
          if (row[col] == 0) row.erase(col);
        }
        changed = true;
      }
    }
    if (row.empty()) continue;
    pivot_col_of_row.push_back(row.begin()->first);
    pivot_cols.insert(row.begin()->first);
    work[pivot_col_of_row.size() - 1] = row;  // compact storage of pivots
  }
  work.resize(pivot_col_of_row.size());

  std::vector<std::vector<long long>> kernel;
  for (int free_col = 0; free_col < n_cols; ++free_col) {
    if (pivot_cols.count(free_col)) continue;
    // Back-substitute x[free_col] = 1 through the echelon rows.
    std::vector<double> x(n_cols, 0.0);
    x[free_col] = 1.0;
    for (std::size_t r = work.size(); r-- > 0;) {
      int pc = pivot_col_of_row[r];
      double acc = 0.0;
      for (const auto& [col, v] : work[r])
        if (col != pc) acc += static_cast<double>(v) * x[col];
      x[pc] = -acc / static_cast<double>(work[r].at(pc));
    }
    std::vector<long long> xi(n_cols);
    for (int c = 0; c < n_cols; ++c) {
      double rounded = std::llround(x[c]);
      if (std::abs(x[c] - rounded) > 1e-9) return {};  // non-integer basis: report failure
      xi[c] = static_cast<long long>(rounded);
    }
    kernel.push_back(std::move(xi));
  }
  return kernel;
}

Outcome criterion5() {
  Outcome out;
  std::vector<Chord> chords = standard_chords();
  for (long long k = -8; k <= 8; ++k) {
    TrianglePackage t = build_triangle(chords, k);
    for (const ChainComplex* c : {&t.sub, &t.total, &t.quotient})
      if (!c->d_squared_report().empty()) out.fail("k=" + std::to_string(k) + ": d^2 != 0");
    ExactnessReport ex = verify_exactness(t);
    if (!ex.exact) out.fail("k=" + std::to_string(k) + ": long exact sequence fails");
  }

  // Kernel of Id ⊕ δ₀: implementation side, per γ.
  TrianglePackage t0 = build_triangle(chords, 0);
  std::size_t checked = 0;
  for (const HomologySummand& s : homology_unit_pivot(t0.total)) {
    if (s.degree != 1) continue;
    if (s.generators.size() != 1) {
      out.fail("gamma " + s.gamma.compact() + ": kernel rank != 1");
      continue;
    }
    std::string lm = generator_label(GeneratorTier::cminus, s.gamma);
    std::string lp = generator_label(GeneratorTier::cplus, s.gamma);
    BimoduleElement g = s.generators[0];
    const LaurentPoly* cm = g.coefficient(lm);
    if (cm == nullptr || !cm->is_unit_monomial()) {
      out.fail("gamma " + s.gamma.compact() + ": kernel generator has no unit c- part");
      continue;
    }
    BimoduleElement antidiag = BimoduleElement::generator(lm) +
                               BimoduleElement::single(lp, LaurentPoly(BigInt(-1)));
    if (!(g.scaled_poly(cm->unit_inverse()) == antidiag))
      out.fail("gamma " + s.gamma.compact() + ": kernel generator is not the anti-diagonal");
    ++checked;
  }
  if (checked != chords.size()) out.fail("kernel generators missing for some classes");

  // Brute-force oracle on the exponent window [-12, 12]: the kernel of
  // (u, v) -> u + v on the truncated pair must be exactly the span of the
  // anti-diagonal monomial pairs.
  const int W = 12, side = 2 * W + 1, n_mono = side * side;
  auto mono_index = [&](int a, int b) { return (a + W) * side + (b + W); };
  std::vector<std::map<int, long long>> rows;
  for (int a = -W; a <= W; ++a)
    for (int b = -W; b <= W; ++b)
      rows.push_back({{mono_index(a, b), 1}, {n_mono + mono_index(a, b), 1}});
  auto kernel = integer_kernel(rows, 2 * n_mono);
  if (kernel.size() != static_cast<std::size_t>(n_mono)) {
    out.fail("oracle kernel dimension " + std::to_string(kernel.size()) + " != " +
             std::to_string(n_mono));
  } else {
    for (const auto& x : kernel) {
      for (int i = 0; i < n_mono; ++i)
        if (x[i] != -x[n_mono + i]) out.fail("oracle kernel vector is not anti-diagonal");
      long long support = 0;
      for (long long v : x) support += v != 0;
      if (support == 0) out.fail("oracle kernel vector vanishes");
    }
    // Implementation generator (c, -c) sits in the oracle span: v = -u.
    // Oracle vectors are μ-multiples of it, closing the two-way check.
  }
  return out;
}

// --------------------------------------------------------------------------
// 6. Distinguishing verdicts over the twist grid

Outcome criterion6() {
  Outcome out;
  std::vector<Chord> chords = standard_chords();
  auto t0 = std::chrono::steady_clock::now();
  for (long long k = -8; k <= 8; ++k) {
    for (long long kp = -8; kp <= 8; ++kp) {
      Verdict v = distinguish(k, kp, chords);
      if (v.distinguished != (k != kp)) {
        out.fail("verdict wrong at (" + std::to_string(k) + "," + std::to_string(kp) + ")");
        continue;
      }
      if (!v.distinguished) continue;
      if (!v.witness) {
        out.fail("missing witness at (" + std::to_string(k) + "," + std::to_string(kp) + ")");
        continue;
      }
      // Independent evaluation of Id ⊕ δ_{k-k'} on the witness.
      const Obstruction& ob = *v.witness;
      long long kappa = k - kp;
      std::string l0 = generator_label(GeneratorTier::c0, ob.gamma);
      BimoduleElement image;
      for (const auto& [label, poly] : ob.u.terms())
        image += BimoduleElement::single(l0, poly);
      for (const auto& [label, poly] : ob.v.terms())
        image += bimodule_act({-kappa, 0}, BimoduleElement::single(l0, poly), {0, kappa});
      if (image.is_zero() || !(image == ob.image))
        out.fail("witness re-check failed at (" + std::to_string(k) + "," + std::to_string(kp) +
                 ")");
      // And the witness dies under Id ⊕ δ₀.
      BimoduleElement fold0;
      for (const auto& [label, poly] : ob.u.terms()) fold0 += BimoduleElement::single(l0, poly);
      for (const auto& [label, poly] : ob.v.terms()) fold0 += BimoduleElement::single(l0, poly);
      if (!fold0.is_zero())
        out.fail("witness not in ker(Id ⊕ δ₀) at (" + std::to_string(k) + "," +
                 std::to_string(kp) + ")");
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 5.0) out.fail("grid runtime " + std::to_string(dt) + " s");
  return out;
}

// --------------------------------------------------------------------------
// 7. Braid layer

Outcome criterion7() {
  Outcome out;
  std::mt19937 rng(7777);
  std::uniform_int_distribution<int> dg(0, 4), de(1, 3), dl(0, 6);
  auto random_braid = [&](int genus) {
    std::vector<BraidLetter> ls;
    int len = dl(rng);
    for (int i = 0; i < len; ++i)
      ls.push_back({dg(rng) % (2 * genus + 1), de(rng) * (rng() % 2 ? 1 : -1)});
    return BraidWord::from_letters(genus, ls);
  };
  for (int i = 0; i < 1000; ++i) {
    BraidWord u = random_braid(2), v = random_braid(2);
    if (delta(u * v) != delta(u) * delta(v)) out.fail("delta homomorphism fails");
  }
  for (int g : {1, 2, 3}) {
    for (const BraidWord& r : relator_list(g)) {
      if (delta(r) != 1) out.fail("relator with delta != +1 at genus " + std::to_string(g));
      auto [parity, asums] = r.abelianization();
      bool zero = parity == 0;
      for (long long s : asums) zero &= s == 0;
      if (!zero) out.fail("relator does not abelianize to zero at genus " + std::to_string(g));
    }
  }
  for (long long k = -64; k <= 64; ++k)
    if (sigma_exponent(BraidWord::sigma_power(1, k)) != k)
      out.fail("sigma exponent round trip fails at k=" + std::to_string(k));
  return out;
}

// --------------------------------------------------------------------------
// 8. Chord enumeration

Outcome criterion8() {
  Outcome out;
  std::mt19937 rng(31415);
  std::uniform_real_distribution<double> dd(-1.0, 1.0), dc(0.1, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    double dx = dd(rng), dy = dd(rng), cutoff = dc(rng);
    std::vector<Chord> got = enumerate_chords(SurfaceSpec::torus(dx, dy), cutoff);
    std::set<std::pair<long long, long long>> expect;
    long long R = static_cast<long long>(std::ceil(cutoff + 2));
    for (long long m = -R; m <= R; ++m)
      for (long long n = -R; n <= R; ++n)
        if (std::hypot(dx + m, dy + n) <= cutoff) expect.insert({m, n});
    std::set<std::pair<long long, long long>> gotset;
    for (const Chord& c : got) gotset.insert(c.gamma.torus_exponents());
    if (gotset != expect || gotset.size() != got.size())
      out.fail("torus enumeration mismatch at trial " + std::to_string(trial));
  }
  for (int i = 0; i < 1000; ++i) {
    int len = 1 + static_cast<int>(rng() % 20);
    std::vector<Letter> raw;
    std::vector<long long> sums(4, 0);
    for (int j = 0; j < len; ++j) {
      int gen = static_cast<int>(rng() % 4);
      int e = rng() % 2 ? 1 : -1;
      raw.push_back({gen, e});
      sums[gen] += e;
    }
    GroupWord w = GroupWord::from_letters(GroupKind::surface, 2, raw);
    if (w.abelianization() != sums) out.fail("Dehn reduction changes the abelianization");
  }
  return out;
}

// --------------------------------------------------------------------------
// 9. CLI determinism

Outcome criterion9(const std::string& cli, const fs::path& tmp) {
  Outcome out;
  fs::create_directories(tmp);
  fs::path cfg_path = tmp / "run.cfg";
  {
    std::ofstream cfg(cfg_path);
    cfg << "surface=torus\ndx=0.3\ndy=0\ncutoff=1.5\nk=1\nkprime=0\n"
        << "seed-grid=100x32\nnfan=120\n";
  }
  auto run = [&](const std::string& sub, const std::string& extra, const fs::path& out_path,
                 const fs::path& svg_path) {
    std::string cmd = cli + " --config " + cfg_path.string() + " --out " + out_path.string();
    if (!svg_path.empty()) cmd += " --svg " + svg_path.string();
    cmd += " " + extra + " " + sub + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  struct Cmd {
    std::string sub, extra;
    bool svg;
  };
  for (const Cmd& c : {Cmd{"chords", "", false}, Cmd{"morse", "", true},
                       Cmd{"complex", "--mode symbolic", false}, Cmd{"triangle", "", false},
                       Cmd{"distinguish", "", false}}) {
    fs::path o1 = tmp / (c.sub + ".1.txt"), o2 = tmp / (c.sub + ".2.txt");
    fs::path s1 = c.svg ? tmp / (c.sub + ".1.svg") : fs::path();
    fs::path s2 = c.svg ? tmp / (c.sub + ".2.svg") : fs::path();
    int r1 = run(c.sub, c.extra, o1, s1);
    int r2 = run(c.sub, c.extra, o2, s2);
    if (r1 != 0 || r2 != 0) {
      out.fail(c.sub + ": nonzero exit status");
      continue;
    }
    if (slurp(o1) != slurp(o2) || slurp(o1).empty())
      out.fail(c.sub + ": reports differ between runs");
    if (c.svg && slurp(s1) != slurp(s2)) out.fail(c.sub + ": svg differs between runs");
  }
  // Morse-mode and symbolic-mode complex reports are byte-identical.
  fs::path om = tmp / "complex.morse.txt";
  if (run("complex", "--mode morse --k 2", om, {}) != 0 ||
      run("complex", "--mode symbolic --k 2", tmp / "complex.sym.txt", {}) != 0)
    out.fail("complex mode comparison: nonzero exit status");
  else if (slurp(om) != slurp(tmp / "complex.sym.txt"))
    out.fail("complex: morse and symbolic serializations differ");
  // Flags override config-file values.
  fs::path ov = tmp / "override.txt";
  if (run("distinguish", "--k 3", ov, {}) != 0 ||
      slurp(ov).find("k 3 kprime 0 kappa 3") == std::string::npos)
    out.fail("distinguish: flag did not override the config file");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <braidhom-cli> <scratch-dir> [criterion]\n";
    return 2;
  }
  std::string cli = argv[1];
  fs::path tmp = argv[2];
  int only = argc > 3 ? std::atoi(argv[3]) : 0;

  struct Entry {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Entry table[] = {
      {1, "critical-point census (3 positive points, indices, stability, <10s/k)", criterion1},
      {2, "rigid trajectory counts (1 + 1 per k, fan doubling, <30s/k)", criterion2},
      {3, "morse-mode differential equals symbolic (exact, k in -2..3)", criterion3},
      {4, "analytic gradient vs finite differences (<1e-6, 5 perturbations)", criterion4},
      {5, "homological suite (d^2, exactness k in [-8,8], anti-diagonal kernel)", criterion5},
      {6, "distinguish grid [-8,8]^2 with verified witnesses (<5s)", criterion6},
      {7, "braid layer (delta homomorphism, relators, sigma exponent)", criterion7},
      {8, "chord enumeration vs oracles (torus box, Dehn/abelianization)", criterion8},
  };

  bool all = true;
  auto report = [&](int id, const char* name, const Outcome& r, double secs) {
    all &= r.pass;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << name;
    if (!r.note.empty()) std::cout << " -- " << r.note;
    std::cout << " (" << static_cast<int>(secs) << "s)" << std::endl;
  };
  for (const Entry& e : table) {
    if (only != 0 && e.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome r = e.run();
    report(e.id, e.name, r, seconds_since(t0));
  }
  if (only == 0 || only == 9) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome r = criterion9(cli, tmp);
    report(9, "CLI determinism (byte-identical reports)", r, seconds_since(t0));
  }
  return all ? 0 : 1;
}
