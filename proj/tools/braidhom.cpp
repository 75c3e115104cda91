// Command-line surface for the sutured Legendrian homology pipeline:
// chord enumeration, the Morse model of a local 2-braid, the
// cylindrical/wrapped/exterior complexes, the exact triangle, and the
// braid-distinguishing verdict.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "braidhom/config.hpp"
#include "braidhom/errors.hpp"
#include "braidhom/report.hpp"
#include "braidhom/svg.hpp"

namespace {

using namespace braidhom;

void emit(const RunConfig& cfg, const std::string& report) {
  if (cfg.out == "-")
    std::cout << report;
  else
    write_file(cfg.out, report);
}

TrianglePackage make_triangle(const RunConfig& cfg, const std::vector<Chord>& chords) {
  TrianglePackage t = build_triangle(chords, cfg.k);
  if (cfg.mode == "morse") t.total = build_wrapped_morse(chords, cfg.morse_params());
  return t;
}

int run_chords(const RunConfig& cfg) {
  SurfaceSpec spec = cfg.surface_spec();
  std::vector<Chord> chords = enumerate_chords(spec, cfg.cutoff);
  emit(cfg, render_chords_report(spec, cfg.cutoff, chords));
  return 0;
}

int run_morse(const RunConfig& cfg) {
  MorseParams params = cfg.morse_params();
  MorseProblem mp(params);
  std::vector<CriticalPoint> cps = mp.find_critical_points();
  std::vector<Trajectory> trajectories;
  for (auto& [key, trs] : mp.all_rigid_trajectories(cps))
    for (Trajectory& t : trs) trajectories.push_back(std::move(t));
  emit(cfg, render_morse_report(params, cps, trajectories));
  if (!cfg.svg.empty()) write_file(cfg.svg, render_morse_svg(mp, cps, trajectories));
  return 0;
}

int run_complex(const RunConfig& cfg) {
  std::vector<Chord> chords = enumerate_chords(cfg.surface_spec(), cfg.cutoff);
  emit(cfg, render_complex_report(make_triangle(cfg, chords), cfg.mod2));
  return 0;
}

int run_triangle(const RunConfig& cfg) {
  std::vector<Chord> chords = enumerate_chords(cfg.surface_spec(), cfg.cutoff);
  TrianglePackage t = make_triangle(cfg, chords);
  emit(cfg, render_triangle_report(cfg.k, t, verify_exactness(t)));
  return 0;
}

int run_distinguish(const RunConfig& cfg) {
  std::vector<Chord> chords = enumerate_chords(cfg.surface_spec(), cfg.cutoff);
  emit(cfg, render_distinguish_report(cfg.k, cfg.kprime, distinguish(cfg.k, cfg.kprime, chords)));
  return 0;
}

int fail(const std::string& code, const std::string& message, int exit_code) {
  std::cerr << render_error_report(code, message);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"sutured Legendrian homology of local 2-braids"};
  app.set_config("--config", "", "flat key=value configuration file");
  app.require_subcommand(1);

  app.add_option("--surface", cfg.surface, "surface kind: torus | hyperbolic");
  app.add_option("--genus", cfg.genus, "genus of the hyperbolic surface (>= 2)");
  app.add_option("--dx", cfg.dx, "torus basepoint displacement, x");
  app.add_option("--dy", cfg.dy, "torus basepoint displacement, y");
  app.add_option("--cutoff", cfg.cutoff, "chord action / word-length cutoff");
  app.add_option("--k", cfg.k, "twist exponent of the local braid");
  app.add_option("--kprime", cfg.kprime, "twist exponent of the second braid");
  app.add_option("--mode", cfg.mode, "wrapped differential source: symbolic | morse");
  app.add_option("--u", cfg.U, "half-width U of the interior region");
  app.add_option("--eps0", cfg.eps0, "suture exponent rate");
  app.add_option("--eps1", cfg.eps1, "strand displacement radius");
  app.add_option("--softening", cfg.softening, "softening m of the G profile");
  app.add_option("--onset", cfg.onset, "onset x1 of the wrapping derivative");
  app.add_option("--seed-grid", cfg.seed_grid, "Newton seed grid, e.g. 200x64");
  app.add_option("--nfan", cfg.n_fan, "shooting fan size");
  app.add_option("--tol-grad", cfg.tol_grad, "gradient norm tolerance at critical points");
  app.add_option("--out", cfg.out, "report path ('-' = stdout)");
  app.add_option("--svg", cfg.svg, "heatmap SVG path (morse command)");
  app.add_flag("--mod2", cfg.mod2, "serialize complexes with mod-2 coefficients");

  CLI::App* c_chords = app.add_subcommand("chords", "enumerate Reeb-chord classes");
  CLI::App* c_morse = app.add_subcommand("morse", "critical points and rigid trajectories");
  CLI::App* c_complex = app.add_subcommand("complex", "build and serialize the complexes");
  CLI::App* c_triangle = app.add_subcommand("triangle", "exactness report for the triangle");
  CLI::App* c_dist = app.add_subcommand("distinguish", "decide whether s^k and s^k' differ");
  for (CLI::App* sub : {c_chords, c_morse, c_complex, c_triangle, c_dist}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("E_USAGE", e.what(), 2);
  }

  try {
    cfg.validate();
    if (c_chords->parsed()) return run_chords(cfg);
    if (c_morse->parsed()) return run_morse(cfg);
    if (c_complex->parsed()) return run_complex(cfg);
    if (c_triangle->parsed()) return run_triangle(cfg);
    return run_distinguish(cfg);
  } catch (const FormatError& e) {
    return fail("E_FORMAT", e.what(), 6);
  } catch (const DomainError& e) {
    return fail("E_DOMAIN", e.what(), 3);
  } catch (const NumericalError& e) {
    return fail("E_NUMERIC", e.what(), 4);
  } catch (const UnsupportedError& e) {
    return fail("E_UNSUPPORTED", e.what(), 5);
  } catch (const Error& e) {
    return fail("E_IO", e.what(), 7);
  } catch (const std::exception& e) {
    return fail("E_INTERNAL", e.what(), 8);
  }
}
