#include "braidhom/report.hpp"

#include <cstdio>
#include <sstream>

namespace braidhom {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string tier_of(Tier t) {
  switch (t) {
    case Tier::interior: return "c0";
    case Tier::ext_minus: return "c-";
    case Tier::ext_plus: return "c+";
  }
  return "?";
}

}  // namespace

std::string render_chords_report(const SurfaceSpec& spec, double cutoff,
                                 const std::vector<Chord>& chords) {
  std::ostringstream os;
  os << "# braidhom v1 chords\n";
  if (spec.kind == SurfaceSpec::Kind::torus)
    os << "surface torus\ndisplacement " << num(spec.dx) << ' ' << num(spec.dy) << '\n';
  else
    os << "surface hyperbolic\ngenus " << spec.genus << '\n';
  os << "cutoff " << num(cutoff) << '\n';
  os << "count " << chords.size() << '\n';
  for (const Chord& c : chords) os << c.gamma.str() << '\t' << num(c.action) << '\n';
  return os.str();
}

std::string render_morse_report(const MorseParams& p, const std::vector<CriticalPoint>& cps,
                                const std::vector<Trajectory>& trajectories) {
  std::ostringstream os;
  os << "# braidhom v1 morse\n";
  os << "k " << p.k << '\n';
  os << "U " << num(p.U) << " eps0 " << num(p.eps0) << " eps1 " << num(p.eps1) << '\n';
  os << "seed-grid " << p.seeds_a << 'x' << p.seeds_theta << " n-fan " << p.n_fan << '\n';
  os << "critical-points " << cps.size() << '\n';
  for (const CriticalPoint& cp : cps)
    os << "cp tier " << tier_of(cp.tier) << " a " << num(cp.a) << " theta " << num(cp.theta)
       << " value " << num(cp.value) << " index " << cp.index << " eig " << num(cp.hess_eig[0])
       << ' ' << num(cp.hess_eig[1]) << '\n';
  os << "trajectories " << trajectories.size() << '\n';
  for (const Trajectory& t : trajectories) {
    LaurentBimonomial m = winding_to_coefficient(t);
    os << "traj src " << tier_of(t.src.tier) << " dst " << tier_of(t.dst.tier) << " dtheta "
       << num(t.dtheta) << " winding " << t.winding << " coeff " << m.str() << " samples "
       << t.samples.size() << '\n';
  }
  return os.str();
}

std::string render_complex_report(const TrianglePackage& t, bool mod2) {
  std::ostringstream os;
  os << "# braidhom v1 complex-report\n";
  os << t.total.serialize(mod2) << t.sub.serialize(mod2) << t.quotient.serialize(mod2);
  for (const ChainComplex* c : {&t.total, &t.sub, &t.quotient}) {
    auto bad = c->d_squared_report();
    os << "d2 " << c->name() << (bad.empty() ? " ok" : " FAILED") << '\n';
    for (const auto& [label, elem] : bad) os << "d2-violation " << label << " -> " << elem.str() << '\n';
  }
  return os.str();
}

std::string render_triangle_report(long long k, const TrianglePackage& t,
                                   const ExactnessReport& ex) {
  std::ostringstream os;
  os << "# braidhom v1 triangle\n";
  os << "k " << k << '\n';
  std::vector<GroupWord> gammas;
  for (const ChordGenerator& g : t.sub.basis()) gammas.push_back(g.gamma);
  os << "classes " << gammas.size() << '\n';
  std::vector<HomologySummand> hs = homology_unit_pivot(t.sub);
  std::vector<HomologySummand> ht = homology_unit_pivot(t.total);
  std::vector<HomologySummand> hq = homology_unit_pivot(t.quotient);
  auto rank = [](const std::vector<HomologySummand>& h, const GroupWord& g, int d) {
    for (const HomologySummand& s : h)
      if (s.degree == d && s.gamma == g) return s.generators.size();
    return static_cast<std::size_t>(0);
  };
  for (const GroupWord& g : gammas)
    os << "gamma " << g.compact() << " H0(sub) " << rank(hs, g, 0) << " H1(total) "
       << rank(ht, g, 1) << " H1(ext) " << rank(hq, g, 1) << '\n';
  os << "exact " << (ex.exact ? "yes" : "no") << '\n';
  for (const ExactnessIssue& i : ex.issues)
    os << "issue gamma " << i.gamma.compact() << " degree " << i.degree << " position "
       << i.position << " detail " << i.detail << '\n';
  return os.str();
}

std::string render_distinguish_report(long long k, long long kprime, const Verdict& v) {
  std::ostringstream os;
  os << "# braidhom v1 distinguish\n";
  os << "k " << k << " kprime " << kprime << " kappa " << v.kappa << '\n';
  os << "verdict " << (v.distinguished ? "distinguished" : "not_distinguished") << '\n';
  if (v.witness) {
    os << "witness gamma " << v.witness->gamma.compact() << '\n';
    os << "witness u " << v.witness->u.str() << '\n';
    os << "witness v " << v.witness->v.str() << '\n';
    os << "witness image " << v.witness->image.str() << '\n';
  }
  return os.str();
}

std::string render_error_report(const std::string& code, const std::string& message) {
  std::ostringstream os;
  os << "# braidhom v1 error\n";
  os << "code " << code << '\n';
  os << "message " << message << '\n';
  return os.str();
}

}  // namespace braidhom
