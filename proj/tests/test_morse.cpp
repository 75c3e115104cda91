#include <doctest.h>

#include <cmath>
#include <random>

#include "braidhom/errors.hpp"
#include "braidhom/morse.hpp"

using namespace braidhom;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Independent 1-D Newton oracle for the exterior critical equation
// eps1*cos(theta) + H'(x) = 0 at theta = pi, i.e. H'(x) = eps1.
double exterior_root_oracle(const MorseProblem& mp) {
  double x = mp.params().onset + 0.5;
  for (int i = 0; i < 200; ++i) {
    double f = mp.wrap_Hp(x) - mp.params().eps1;
    double fd = (mp.wrap_Hp(x + 1e-7) - mp.wrap_Hp(x - 1e-7)) / 2e-7;
    double step = f / fd;
    x -= step;
    if (std::abs(step) < 1e-14) break;
  }
  return x;
}

MorseParams quick(long long k) {
  MorseParams p;
  p.k = k;
  p.seeds_a = 120;
  p.seeds_theta = 48;
  p.n_fan = 90;
  return p;
}

}  // namespace

TEST_CASE("interior value: h(0, pi) = eps1 * G(0) > 0") {
  MorseProblem mp(quick(0));
  double g0 = mp.profile_G(0.0);
  CHECK(g0 == doctest::Approx(std::exp(0.1 * (1.0 - std::sqrt(26.0)))).epsilon(1e-12));
  CHECK(mp.eval_h(0.0, kPi) == doctest::Approx(0.5 * g0).epsilon(1e-12));
  CHECK(mp.eval_h(0.0, kPi) > 0);
}

TEST_CASE("k=0 model is even in a") {
  MorseProblem mp(quick(0));
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> da(-8.0, 8.0), dt(0.0, 2 * kPi);
  for (int i = 0; i < 300; ++i) {
    double a = da(rng), th = dt(rng);
    CHECK(mp.eval_h(a, th) == doctest::Approx(mp.eval_h(-a, th)).epsilon(1e-12));
  }
}

TEST_CASE("analytic gradient matches central finite differences") {
  std::mt19937 rng(501);
  std::uniform_real_distribution<double> da(-8.4, 8.4), dt(-10.0, 10.0);
  for (long long k : {0ll, 1ll, -2ll, 3ll}) {
    MorseProblem mp(quick(k));
    for (int i = 0; i < 250; ++i) {
      double a = da(rng), th = dt(rng);
      auto g = mp.eval_grad(a, th);
      const double h = 1e-5;
      double fa = (mp.eval_h(a + h, th) - mp.eval_h(a - h, th)) / (2 * h);
      double ft = (mp.eval_h(a, th + h) - mp.eval_h(a, th - h)) / (2 * h);
      double denom = 1.0 + std::hypot(g[0], g[1]);
      CHECK(std::abs(g[0] - fa) / denom < 1e-6);
      CHECK(std::abs(g[1] - ft) / denom < 1e-6);
    }
  }
}

TEST_CASE("wrapping term: flat until onset, smooth growth after") {
  MorseProblem mp(quick(1));
  CHECK(mp.wrap_W(3.0) == 0.0);          // interior
  CHECK(mp.wrap_W(5.5) == 0.0);          // exterior, before the onset
  CHECK(mp.wrap_W(7.5) > 0.0);
  CHECK(mp.wrap_W(-7.5) == doctest::Approx(mp.wrap_W(7.5)).epsilon(1e-12));
  CHECK(mp.wrap_Hp(2.0) == doctest::Approx(1.0).epsilon(1e-12));  // (2-1)^2
}

TEST_CASE("critical point census at k=1: positions, indices, values") {
  MorseParams p = quick(1);
  MorseProblem mp(p);
  std::vector<CriticalPoint> cps = mp.find_critical_points();
  REQUIRE(cps.size() == 3);

  double xs = exterior_root_oracle(mp);
  CHECK(xs == doctest::Approx(1.0 + std::sqrt(0.5)).epsilon(1e-10));
  CHECK(mp.exterior_root() == doctest::Approx(xs).epsilon(1e-10));

  CHECK(cps[0].tier == Tier::ext_minus);
  CHECK(cps[1].tier == Tier::interior);
  CHECK(cps[2].tier == Tier::ext_plus);
  CHECK(cps[0].a == doctest::Approx(-(p.U + xs)).epsilon(1e-8));
  CHECK(cps[1].a == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(cps[2].a == doctest::Approx(p.U + xs).epsilon(1e-8));
  for (const CriticalPoint& cp : cps) {
    CHECK(cp.theta == doctest::Approx(kPi).epsilon(1e-8));
    CHECK(cp.value > 0);
  }
  CHECK(cps[0].index == 2);
  CHECK(cps[1].index == 1);
  CHECK(cps[2].index == 2);
}

TEST_CASE("critical sets coincide for k and -k") {
  MorseProblem mp_p(quick(2)), mp_m(quick(-2));
  auto a = mp_p.find_critical_points();
  auto b = mp_m.find_critical_points();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].a == doctest::Approx(b[i].a).epsilon(1e-9));
    CHECK(a[i].theta == doctest::Approx(b[i].theta).epsilon(1e-9));
    CHECK(a[i].index == b[i].index);
  }
}

TEST_CASE("rigid trajectories: counts, windings, descent") {
  for (long long k : {0ll, 1ll, -2ll}) {
    CAPTURE(k);
    MorseProblem mp(quick(k));
    auto cps = mp.find_critical_points();
    REQUIRE(cps.size() == 3);
    auto all = mp.all_rigid_trajectories(cps);
    // c- -> c0 and c+ -> c0, one trajectory each.
    REQUIRE(all.size() == 2);
    for (auto& [key, trs] : all) {
      REQUIRE(trs.size() == 1);
      const Trajectory& t = trs[0];
      CHECK(t.dst.tier == Tier::interior);
      long long expect_w = t.src.tier == Tier::ext_plus ? k : 0;
      CHECK(t.winding == expect_w);
      CHECK(std::abs(t.dtheta / (2 * kPi) - static_cast<double>(t.winding)) < 0.25);
      // h strictly decreases along the samples.
      for (std::size_t i = 1; i < t.samples.size(); ++i) {
        double h0 = mp.eval_h(t.samples[i - 1][0], t.samples[i - 1][1]);
        double h1 = mp.eval_h(t.samples[i][0], t.samples[i][1]);
        CHECK(h1 <= h0 + 1e-9);
      }
      // Endpoints near the named critical points.
      auto close = [](const std::array<double, 2>& s, const CriticalPoint& cp) {
        double dth = std::remainder(s[1] - cp.theta, 2 * kPi);
        return std::hypot(s[0] - cp.a, dth) < 2e-3;
      };
      CHECK(close(t.samples.front(), t.src));
      CHECK(close(t.samples.back(), t.dst));
    }
  }
}

TEST_CASE("winding to coefficient convention") {
  Trajectory t;
  t.winding = 0;
  CHECK(winding_to_coefficient(t) == LaurentBimonomial{0, 0});
  t.winding = 1;
  CHECK(winding_to_coefficient(t) == LaurentBimonomial{-1, 1});
  t.winding = -2;
  CHECK(winding_to_coefficient(t) == LaurentBimonomial{2, -2});
}

TEST_CASE("windings negate between k and -k") {
  MorseProblem mp(quick(-2));
  auto cps = mp.find_critical_points();
  auto all = mp.all_rigid_trajectories(cps);
  for (auto& [key, trs] : all)
    for (const Trajectory& t : trs)
      if (t.src.tier == Tier::ext_plus) {
        CHECK(t.winding == -2);
        CHECK(winding_to_coefficient(t) == LaurentBimonomial{2, -2});
      }
}

TEST_CASE("count_rigid_trajectories validates the index gap") {
  MorseProblem mp(quick(0));
  auto cps = mp.find_critical_points();
  REQUIRE(cps.size() == 3);
  const CriticalPoint *c0 = nullptr, *cp = nullptr, *cm = nullptr;
  for (const CriticalPoint& c : cps) {
    if (c.tier == Tier::interior) c0 = &c;
    if (c.tier == Tier::ext_plus) cp = &c;
    if (c.tier == Tier::ext_minus) cm = &c;
  }
  CHECK_THROWS_AS(mp.count_rigid_trajectories(*cp, *cm), DomainError);  // equal index
  auto trs = mp.count_rigid_trajectories(*cp, *c0);
  CHECK(trs.size() == 1);
}

TEST_CASE("census and counts are stable under tolerance tightening") {
  MorseParams p = quick(1);
  MorseParams tight = p;
  tight.ode_tol = 1e-10;
  tight.tol_grad = 1e-10;
  tight.tol_endpoint = 1e-4;
  auto cps = MorseProblem(p).find_critical_points();
  auto cps_t = MorseProblem(tight).find_critical_points();
  REQUIRE(cps.size() == cps_t.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    CHECK(cps[i].a == doctest::Approx(cps_t[i].a).epsilon(1e-8));
    CHECK(cps[i].index == cps_t[i].index);
  }
  auto all = MorseProblem(tight).all_rigid_trajectories(cps_t);
  REQUIRE(all.size() == 2);
  for (auto& [key, trs] : all) CHECK(trs.size() == 1);
}

TEST_CASE("parameter validation") {
  MorseParams bad = quick(0);
  bad.eps1 = -1.0;
  CHECK_THROWS_AS(MorseProblem{bad}, DomainError);
  MorseParams tiny = quick(0);
  tiny.kink_width = 1.0;  // reaches the critical level eps1 = 0.5
  CHECK_THROWS_AS(MorseProblem{tiny}, DomainError);
}
