#include "braidhom/morse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

#include "braidhom/errors.hpp"

namespace braidhom {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double smoothstep5(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double smoothstep5_d(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  double u = t * (1.0 - t);
  return 30.0 * u * u;
}

double wrap_pi(double x) {
  x = std::fmod(x, kTwoPi);
  if (x > kTwoPi / 2) x -= kTwoPi;
  if (x < -kTwoPi / 2) x += kTwoPi;
  return x;
}

double wrap_02pi(double x) {
  x = std::fmod(x, kTwoPi);
  if (x < 0) x += kTwoPi;
  return x;
}

// 32-point Gauss-Legendre rule on [-1, 1]; nodes by Newton iteration on
// the Legendre recurrence. Machine precision for the smooth integrands
// below.
struct GaussLegendre {
  std::array<double, 32> node{}, weight{};
  GaussLegendre() {
    const int n = 32;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
          double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      node[i] = -x;
      node[n - 1 - i] = x;
      weight[i] = weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

const GaussLegendre& gauss32() {
  static const GaussLegendre g;
  return g;
}

template <typename F>
double integrate(F&& f, double lo, double hi) {
  if (hi <= lo) return 0.0;
  const GaussLegendre& g = gauss32();
  double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (int i = 0; i < 32; ++i) sum += g.weight[i] * f(mid + half * g.node[i]);
  return sum * half;
}

double dist_circ(double a1, double t1, double a2, double t2) {
  return std::hypot(a1 - a2, wrap_pi(t1 - t2));
}

// Chunked parallel-for; results must be written by index only.
template <typename F>
void parallel_for(std::size_t n, F&& body) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (hw <= 1 || n < 16) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + hw - 1) / hw;
  for (unsigned t = 0; t < hw; ++t) {
    std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace

double MorseParams::x_max() const { return 2.0 * (onset + std::sqrt(eps1)); }

MorseProblem::MorseProblem(MorseParams params) : params_(params) {
  const MorseParams& p = params_;
  if (p.U <= 0 || p.eps0 <= 0 || p.eps1 <= 0 || p.softening <= 0 || p.onset <= 0 ||
      p.kink_width <= 0 || p.blend_width <= 0)
    throw DomainError("MorseProblem: parameters must be positive");
  if (p.blend_width >= p.U) throw DomainError("MorseProblem: blend_width must be < U");
  if (p.kink_width * p.kink_width >= p.eps1)
    throw DomainError("MorseProblem: kink smoothing reaches the critical level, reduce kink_width");
  if (p.seeds_a < 2 || p.seeds_theta < 2 || p.n_fan < 8)
    throw DomainError("MorseProblem: seed grid / fan too small");

  blend_const_ = integrate(
      [this](double s) { return std::exp(params_.eps0 * s) * wrap_Hp(s); },
      p.onset - p.kink_width, p.onset + p.kink_width);

  // Gluing monotonicity: G must decrease on a < 0 and increase on a > 0,
  // so that the interior critical equation has the single root a = 0.
  double A = p.U + 3 * p.x_max();
  for (int i = 1; i <= 400; ++i) {
    double a = A * i / 400.0;
    if (profile_G_da(a) <= 0.0 || profile_G_da(-a) >= 0.0)
      throw NumericalError("MorseProblem: G profile is not monotone away from 0; "
                           "decrease eps0 or blend_width");
  }
  // η plateaus, sampled strictly inside to stay clear of rounding at the
  // smoothstep endpoints.
  double margin = 1e-9 * (1.0 + p.U);
  if (profile_eta(3 * p.U / 5 - margin) != 0.0 ||
      profile_eta(4 * p.U / 5 + margin) != kTwoPi * static_cast<double>(p.k))
    throw NumericalError("MorseProblem: eta plateau construction failed");
}

double MorseProblem::profile_G(double a) const {
  const MorseParams& p = params_;
  double r = std::abs(a);
  double phi = std::sqrt(a * a + p.softening * p.softening) -
               std::sqrt(p.U * p.U + p.softening * p.softening);
  double g;
  if (r >= p.U) {
    g = r - p.U;
  } else if (r <= p.U - p.blend_width) {
    g = phi;
  } else {
    double s = smoothstep5((r - (p.U - p.blend_width)) / p.blend_width);
    g = (1.0 - s) * phi + s * (r - p.U);
  }
  return std::exp(p.eps0 * g);
}

double MorseProblem::profile_G_da(double a) const {
  const MorseParams& p = params_;
  double r = std::abs(a);
  double sgn = a >= 0 ? 1.0 : -1.0;
  double root = std::sqrt(a * a + p.softening * p.softening);
  double phi = root - std::sqrt(p.U * p.U + p.softening * p.softening);
  double dphi_dr = r / root;
  double dg_dr;
  if (r >= p.U) {
    dg_dr = 1.0;
  } else if (r <= p.U - p.blend_width) {
    dg_dr = dphi_dr;
  } else {
    double t = (r - (p.U - p.blend_width)) / p.blend_width;
    double s = smoothstep5(t);
    double ds_dr = smoothstep5_d(t) / p.blend_width;
    dg_dr = (1.0 - s) * dphi_dr + s * 1.0 + ds_dr * ((r - p.U) - phi);
  }
  return p.eps0 * dg_dr * sgn * profile_G(a);
}

double MorseProblem::profile_eta(double a) const {
  const MorseParams& p = params_;
  double t = (a - 3.0 * p.U / 5.0) / (p.U / 5.0);
  return kTwoPi * static_cast<double>(p.k) * smoothstep5(t);
}

double MorseProblem::profile_eta_da(double a) const {
  const MorseParams& p = params_;
  double t = (a - 3.0 * p.U / 5.0) / (p.U / 5.0);
  return kTwoPi * static_cast<double>(p.k) * smoothstep5_d(t) / (p.U / 5.0);
}

double MorseProblem::wrap_Hp(double x) const {
  const MorseParams& p = params_;
  double d = x - p.onset;
  if (d <= -p.kink_width) return 0.0;
  double sq = d * d;
  if (d >= p.kink_width) return sq;
  return smoothstep5((d + p.kink_width) / (2.0 * p.kink_width)) * sq;
}

double MorseProblem::wrap_W(double a) const {
  const MorseParams& p = params_;
  double x = std::abs(a) - p.U;
  double lo = p.onset - p.kink_width;
  if (x <= lo) return 0.0;
  double hi = p.onset + p.kink_width;
  double acc;
  if (x <= hi) {
    acc = integrate([this](double s) { return std::exp(params_.eps0 * s) * wrap_Hp(s); }, lo, x);
  } else {
    // Beyond the smoothing window H'(s) = (s - onset)^2 exactly.
    auto antider = [&](double s) {
      double d = s - p.onset, c = p.eps0;
      return std::exp(c * s) * (d * d / c - 2.0 * d / (c * c) + 2.0 / (c * c * c));
    };
    acc = blend_const_ + antider(x) - antider(hi);
  }
  return p.eps0 * acc;
}

double MorseProblem::wrap_W_da(double a) const {
  const MorseParams& p = params_;
  double x = std::abs(a) - p.U;
  if (x <= p.onset - p.kink_width) return 0.0;
  double sgn = a >= 0 ? 1.0 : -1.0;
  return sgn * p.eps0 * std::exp(p.eps0 * x) * wrap_Hp(x);
}

double MorseProblem::exterior_root() const {
  // Beyond the smoothing window the equation H'(x) = ε₁ is exactly
  // (x - onset)^2 = ε₁; the construction guarantees the root lies there.
  return params_.onset + std::sqrt(params_.eps1);
}

double MorseProblem::eval_h(double a, double theta) const {
  const MorseParams& p = params_;
  return -(p.eps1 * profile_G(a) * std::cos(theta + profile_eta(a)) + wrap_W(a));
}

std::array<double, 2> MorseProblem::eval_grad(double a, double theta) const {
  const MorseParams& p = params_;
  double G = profile_G(a), Gd = profile_G_da(a);
  double eta = profile_eta(a), etad = profile_eta_da(a);
  double c = std::cos(theta + eta), s = std::sin(theta + eta);
  double ha = -(p.eps1 * (Gd * c - G * s * etad) + wrap_W_da(a));
  double ht = p.eps1 * G * s;
  return {ha, ht};
}

std::array<double, 3> MorseProblem::hessian_fd(double a, double theta, double step) const {
  auto gpa = eval_grad(a + step, theta), gma = eval_grad(a - step, theta);
  auto gpt = eval_grad(a, theta + step), gmt = eval_grad(a, theta - step);
  double haa = (gpa[0] - gma[0]) / (2 * step);
  double htt = (gpt[1] - gmt[1]) / (2 * step);
  double hat = 0.5 * ((gpa[1] - gma[1]) / (2 * step) + (gpt[0] - gmt[0]) / (2 * step));
  return {haa, hat, htt};
}

namespace {

std::array<double, 2> eigs_sym2(double A, double B, double C) {
  double m = 0.5 * (A + C);
  double d = std::hypot(0.5 * (A - C), B);
  return {m - d, m + d};
}

}  // namespace

std::vector<CriticalPoint> MorseProblem::find_critical_points() const {
  const MorseParams& p = params_;
  const double A = p.U + p.x_max();
  const double guard = A + 2.0;

  struct Hit {
    double a, theta, gn;
  };
  std::vector<Hit> hits(static_cast<std::size_t>(p.seeds_a) * p.seeds_theta,
                        Hit{0, 0, std::numeric_limits<double>::infinity()});

  parallel_for(hits.size(), [&](std::size_t idx) {
    int i = static_cast<int>(idx) / p.seeds_theta;
    int j = static_cast<int>(idx) % p.seeds_theta;
    double a = -A + (2.0 * A) * (i + 0.5) / p.seeds_a;
    double th = kTwoPi * (j + 0.5) / p.seeds_theta;
    const double fd = 1e-6;
    for (int it = 0; it < 60; ++it) {
      auto g = eval_grad(a, th);
      double gn = std::max(std::abs(g[0]), std::abs(g[1]));
      if (gn < 1e-12) {
        hits[idx] = {a, wrap_02pi(th), gn};
        return;
      }
      auto gpa = eval_grad(a + fd, th), gma = eval_grad(a - fd, th);
      auto gpt = eval_grad(a, th + fd), gmt = eval_grad(a, th - fd);
      double j00 = (gpa[0] - gma[0]) / (2 * fd), j01 = (gpt[0] - gmt[0]) / (2 * fd);
      double j10 = (gpa[1] - gma[1]) / (2 * fd), j11 = (gpt[1] - gmt[1]) / (2 * fd);
      double det = j00 * j11 - j01 * j10;
      if (std::abs(det) < 1e-14) return;
      double da = -(j11 * g[0] - j01 * g[1]) / det;
      double dt = -(-j10 * g[0] + j00 * g[1]) / det;
      double n = std::hypot(da, dt);
      if (n > 0.5) {
        da *= 0.5 / n;
        dt *= 0.5 / n;
      }
      a += da;
      th += dt;
      if (std::abs(a) > guard) return;
    }
  });

  // Merge converged seeds within merge_radius.
  std::vector<CriticalPoint> found;
  std::vector<double> best_gn;
  for (const Hit& h : hits) {
    if (!std::isfinite(h.gn)) continue;
    bool merged = false;
    for (std::size_t i = 0; i < found.size(); ++i) {
      if (dist_circ(h.a, h.theta, found[i].a, found[i].theta) < p.merge_radius) {
        if (h.gn < best_gn[i]) {
          found[i].a = h.a;
          found[i].theta = h.theta;
          best_gn[i] = h.gn;
        }
        merged = true;
        break;
      }
    }
    if (!merged) {
      CriticalPoint cp;
      cp.a = h.a;
      cp.theta = h.theta;
      found.push_back(cp);
      best_gn.push_back(h.gn);
    }
  }

  std::vector<CriticalPoint> out;
  for (CriticalPoint cp : found) {
    cp.value = eval_h(cp.a, cp.theta);
    if (!(cp.value > 0)) continue;
    auto g = eval_grad(cp.a, cp.theta);
    if (std::hypot(g[0], g[1]) >= p.tol_grad)
      throw NumericalError("find_critical_points: gradient above tol_grad after Newton");
    auto H = hessian_fd(cp.a, cp.theta);
    cp.hess_eig = eigs_sym2(H[0], H[1], H[2]);
    if (std::min(std::abs(cp.hess_eig[0]), std::abs(cp.hess_eig[1])) < p.tol_degenerate) {
      std::ostringstream os;
      os << "find_critical_points: near-degenerate Hessian at (a=" << cp.a
         << ", theta=" << cp.theta << "); decrease eps0 / keep G close to 1";
      throw NumericalError(os.str());
    }
    cp.index = (cp.hess_eig[0] < 0) + (cp.hess_eig[1] < 0);
    cp.tier = cp.a <= -p.U ? Tier::ext_minus : (cp.a >= p.U ? Tier::ext_plus : Tier::interior);
    out.push_back(cp);
  }
  std::sort(out.begin(), out.end(), [](const CriticalPoint& l, const CriticalPoint& r) {
    if (l.a != r.a) return l.a < r.a;
    return l.theta < r.theta;
  });

  // The construction predicts the three positive points analytically; not
  // recovering one of them means the seed grid or Newton failed.
  const double xs = exterior_root();
  const double pi = kTwoPi / 2;
  for (auto [pa, pt] : {std::pair{0.0, pi}, {p.U + xs, pi}, {-(p.U + xs), pi}}) {
    bool ok = false;
    for (const CriticalPoint& cp : out)
      if (dist_circ(cp.a, cp.theta, pa, pt) < 1e-6) ok = true;
    if (!ok) {
      std::ostringstream os;
      os << "find_critical_points: no Newton convergence near predicted point (a=" << pa
         << ", theta=" << pt << ")";
      throw NumericalError(os.str());
    }
  }
  return out;
}

// Ascent tracer. Trajectories of -grad h are found backwards: the flow
// line into a saddle is transversally unstable forwards but attracting in
// reverse, so the fan sits at the sink and climbs.
//
// The transverse contraction rate onto the twist ridge grows like
// eps1*(1 + eta_k'^2) ~ k^2 while the drift along it is suppressed by the
// same factor, so the flow is stiff precisely where trajectories crawl.
// The stepper is therefore an A-stable 4th-order two-stage Gauss
// collocation with Richardson (step-doubling) error control; step sizes
// stay accuracy-limited instead of stability-limited.
struct FlowTracer {
  const MorseProblem& mp;
  const std::vector<CriticalPoint>& cps;
  std::size_t center;  // fan center; arrival there only counts after leaving

  struct Outcome {
    int terminal = -1;  // index into cps, -1 when none reached
    bool ok = true;
    const char* stop = "none";
    std::vector<std::array<double, 2>> samples;
  };

  std::array<double, 2> field(double a, double th) const {
    auto g = mp.eval_grad(a, th);
    return {g[0], g[1]};  // ascent: +grad
  }

  // One Gauss(2) step y -> y + h/2 (k1 + k2); stages solved by a
  // simplified Newton iteration with a frozen finite-difference Jacobian.
  bool gauss2_step(std::array<double, 2>& y, double hstep) const {
    static constexpr double r3 = 1.7320508075688772;
    static constexpr double A11 = 0.25, A12 = 0.25 - r3 / 6.0;
    static constexpr double A21 = 0.25 + r3 / 6.0, A22 = 0.25;

    const double fd = 1e-7;
    auto fpa = field(y[0] + fd, y[1]), fma = field(y[0] - fd, y[1]);
    auto fpt = field(y[0], y[1] + fd), fmt = field(y[0], y[1] - fd);
    double J[2][2] = {{(fpa[0] - fma[0]) / (2 * fd), (fpt[0] - fmt[0]) / (2 * fd)},
                      {(fpa[1] - fma[1]) / (2 * fd), (fpt[1] - fmt[1]) / (2 * fd)}};

    // Newton matrix M = I4 - hstep (A ⊗ J), factored once per step.
    double M[4][4];
    const double Ac[2][2] = {{A11, A12}, {A21, A22}};
    for (int si = 0; si < 2; ++si)
      for (int sj = 0; sj < 2; ++sj)
        for (int ri = 0; ri < 2; ++ri)
          for (int rj = 0; rj < 2; ++rj)
            M[2 * si + ri][2 * sj + rj] =
                (si == sj && ri == rj ? 1.0 : 0.0) - hstep * Ac[si][sj] * J[ri][rj];
    int piv[4];
    for (int c = 0; c < 4; ++c) {
      int best = c;
      for (int r = c + 1; r < 4; ++r)
        if (std::abs(M[r][c]) > std::abs(M[best][c])) best = r;
      if (std::abs(M[best][c]) < 1e-14) return false;
      std::swap(M[c], M[best]);
      piv[c] = best;
      for (int r = c + 1; r < 4; ++r) {
        double f = M[r][c] / M[c][c];
        M[r][c] = f;  // store the multiplier
        for (int cc = c + 1; cc < 4; ++cc) M[r][cc] -= f * M[c][cc];
      }
    }
    auto solve = [&](double rhs[4]) {
      for (int c = 0; c < 4; ++c) {
        std::swap(rhs[c], rhs[piv[c]]);
        for (int r = c + 1; r < 4; ++r) rhs[r] -= M[r][c] * rhs[c];
      }
      for (int r = 3; r >= 0; --r) {
        for (int c = r + 1; c < 4; ++c) rhs[r] -= M[r][c] * rhs[c];
        rhs[r] /= M[r][r];
      }
    };

    auto f0 = field(y[0], y[1]);
    double k[4] = {f0[0], f0[1], f0[0], f0[1]};  // stage slopes
    bool converged = false;
    double prev_upd = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 12; ++it) {
      auto g1 = field(y[0] + hstep * (A11 * k[0] + A12 * k[2]),
                      y[1] + hstep * (A11 * k[1] + A12 * k[3]));
      auto g2 = field(y[0] + hstep * (A21 * k[0] + A22 * k[2]),
                      y[1] + hstep * (A21 * k[1] + A22 * k[3]));
      double res[4] = {k[0] - g1[0], k[1] - g1[1], k[2] - g2[0], k[3] - g2[1]};
      solve(res);
      double upd = std::max(std::max(std::abs(res[0]), std::abs(res[1])),
                            std::max(std::abs(res[2]), std::abs(res[3])));
      for (int i = 0; i < 4; ++i) k[i] -= res[i];
      double kn = std::max(std::abs(k[0]), std::abs(k[2]));
      if (upd < 1e-13 * (1.0 + kn)) {
        converged = true;
        break;
      }
      // Large twists cancel O(|k θ|) terms inside the field, leaving
      // evaluation noise well above 1e-13; accept once the iteration
      // stalls at a level that cannot disturb the step error budget.
      if (upd < 1e-10 && upd > 0.25 * prev_upd) {
        converged = true;
        break;
      }
      prev_upd = upd;
    }
    if (!converged) return false;
    y[0] += hstep * 0.5 * (k[0] + k[2]);
    y[1] += hstep * 0.5 * (k[1] + k[3]);
    return true;
  }

  Outcome trace(double a0, double th0, bool keep_samples) const {
    const MorseParams& p = mp.params();
    Outcome res;
    std::array<double, 2> y{a0, th0};
    double t = 0.0, dt = 1e-3;
    double h_prev = mp.eval_h(y[0], y[1]);
    bool left_center = false;
    const double escape = p.U + 3 * p.x_max();
    const double t_max = 1e6;
    const bool classify_only = !keep_samples;
    if (keep_samples) res.samples.push_back(y);

    res.stop = "step_budget";
    for (long step = 0; step < 4000000; ++step) {
      if (t > t_max) {
        res.stop = "t_max";
        return res;  // stalled: no arrival
      }
      // Keep single steps from jumping across a tolerance ball.
      auto fy = field(y[0], y[1]);
      double fn = std::hypot(fy[0], fy[1]);
      double dnear = std::numeric_limits<double>::infinity();
      for (const CriticalPoint& cp : cps)
        dnear = std::min(dnear, dist_circ(y[0], y[1], cp.a, cp.theta));
      double cap = (std::max(0.5 * dnear, 0.5 * p.tol_endpoint) + 1e-9) / (fn + 1e-12);
      double hs = std::min(dt, cap);

      // Richardson pair: one full step against two half steps.
      std::array<double, 2> y_full = y, y_half = y;
      bool ok = gauss2_step(y_full, hs) && gauss2_step(y_half, 0.5 * hs) &&
                gauss2_step(y_half, 0.5 * hs);
      double err = std::numeric_limits<double>::infinity();
      if (ok) {
        double sc_a = p.ode_tol + p.ode_tol * std::max(std::abs(y[0]), std::abs(y_half[0]));
        double sc_t = p.ode_tol + p.ode_tol * std::max(std::abs(y[1]), std::abs(y_half[1]));
        double ea = (y_full[0] - y_half[0]) / 15.0, et = (y_full[1] - y_half[1]) / 15.0;
        err = std::sqrt(0.5 * (ea * ea / (sc_a * sc_a) + et * et / (sc_t * sc_t)));
      }
#ifdef BRAIDHOM_TRACE_DEBUG
      if (step % 100000 == 0)
        std::fprintf(stderr, "step %ld t %.3g hs %.3g a %.6f th %.3f err %.3g ok %d\n", step, t,
                     hs, y[0], y[1], err, static_cast<int>(ok));
#endif
      if (ok && err <= 1.0) {
        y = y_half;
        t += hs;
        double h_now = mp.eval_h(y[0], y[1]);
        // Monotonicity slack scales with the integration tolerance: deep
        // in the twist crawl the true per-step gain can sit below the
        // error wobble.
        if (h_now < h_prev - 1e2 * p.ode_tol * (1.0 + std::abs(h_prev))) {
          res.ok = false;  // ascent must increase h
          res.stop = "h_decrease";
          return res;
        }
        h_prev = std::max(h_prev, h_now);
        if (keep_samples) res.samples.push_back(y);
        if (std::abs(y[0]) > escape) {
          res.stop = "escape";
          return res;
        }
        if (dist_circ(y[0], y[1], cps[center].a, cps[center].theta) > 3 * p.tol_endpoint)
          left_center = true;
        for (std::size_t ci = 0; ci < cps.size(); ++ci) {
          if (ci == center && !left_center) continue;
          if (dist_circ(y[0], y[1], cps[ci].a, cps[ci].theta) < p.tol_endpoint) {
            res.terminal = static_cast<int>(ci);
            res.stop = "arrived";
            return res;
          }
        }
        // Early classification: {a = 0} is invariant (G', eta_k' and W'
        // all vanish there), so the a-sign is preserved; once h exceeds
        // the fan center's level, the only critical points the ascent can
        // still reach are those on the same side with higher value. If
        // that candidate is unique, the terminal point is decided.
        if (classify_only && std::abs(y[0]) > 1e-4 &&
            h_now > cps[center].value + 1e-6 * (1.0 + std::abs(cps[center].value))) {
          int candidate = -1, n_cand = 0;
          for (std::size_t ci = 0; ci < cps.size(); ++ci) {
            if (cps[ci].value < h_now) continue;
            if ((y[0] > 0 && cps[ci].a > 1e-6) || (y[0] < 0 && cps[ci].a < -1e-6)) {
              candidate = static_cast<int>(ci);
              ++n_cand;
            }
          }
          if (n_cand == 1) {
            res.terminal = candidate;
            res.stop = "classified";
            return res;
          }
          if (n_cand == 0) {
            res.stop = "nothing_above";
            return res;  // nothing above on this side
          }
        }
      }
      double fac = (ok && err > 0) ? 0.9 * std::pow(err, -0.2) : (ok ? 5.0 : 0.25);
      dt = std::min(5.0, std::max(1e-12, hs * std::clamp(fac, 0.2, 5.0)));
      if (dt <= 1e-12) {
        res.ok = false;
        res.stop = "step_collapse";
        return res;
      }
    }
    return res;
  }
};

std::map<std::size_t, std::vector<Trajectory>> MorseProblem::fan_trajectories(
    const std::vector<CriticalPoint>& cps, std::size_t dst_idx, int n_fan) const {
  const MorseParams& p = params_;
  const CriticalPoint& dst = cps[dst_idx];
  FlowTracer tracer{*this, cps, dst_idx};

  std::vector<int> terminal(n_fan, -1);
  std::vector<char> failed(n_fan, 0);
  parallel_for(static_cast<std::size_t>(n_fan), [&](std::size_t i) {
    double phi = kTwoPi * static_cast<double>(i) / n_fan;
    auto out = tracer.trace(dst.a + p.fan_radius * std::cos(phi),
                            dst.theta + p.fan_radius * std::sin(phi), false);
    terminal[i] = out.terminal;
    failed[i] = out.ok ? 0 : 1;
  });
  for (int i = 0; i < n_fan; ++i)
    if (failed[i])
      throw NumericalError("rigid trajectory flow: integration failure in fan direction " +
                           std::to_string(i));

  std::map<std::size_t, std::vector<Trajectory>> out;
  for (std::size_t src_idx = 0; src_idx < cps.size(); ++src_idx) {
    if (cps[src_idx].index != dst.index + 1) continue;
    // Circular connected components of fan directions arriving at src.
    auto arrives = [&](int i) {
      return terminal[((i % n_fan) + n_fan) % n_fan] == static_cast<int>(src_idx);
    };
    std::vector<std::pair<int, int>> components;  // (start, length) in fan indices
    bool all = true;
    for (int i = 0; i < n_fan; ++i) {
      if (!arrives(i)) all = false;
      if (!arrives(i) || arrives(i - 1)) continue;
      int len = 0;
      while (len < n_fan && arrives(i + len)) ++len;
      components.push_back({i, len});
    }
    if (all) components = {{0, n_fan}};

    std::vector<Trajectory> trajectories;
    for (auto [start, len] : components) {
      int rep = (start + len / 2) % n_fan;
      double phi = kTwoPi * static_cast<double>(rep) / n_fan;
      auto res = tracer.trace(dst.a + p.fan_radius * std::cos(phi),
                              dst.theta + p.fan_radius * std::sin(phi), true);
      if (res.terminal != static_cast<int>(src_idx))
        throw NumericalError(std::string("rigid trajectory flow: representative re-trace "
                                         "diverged (stop: ") +
                             res.stop + ")");
      Trajectory tr;
      std::reverse(res.samples.begin(), res.samples.end());  // descent order
      tr.samples = std::move(res.samples);
      tr.src = cps[src_idx];
      tr.dst = dst;
      tr.dtheta = tr.samples.back()[1] - tr.samples.front()[1];
      tr.winding = std::llround(tr.dtheta / kTwoPi);
      if (std::abs(tr.dtheta / kTwoPi - static_cast<double>(tr.winding)) >= 0.25)
        throw NumericalError("rigid trajectory flow: ambiguous winding");
      trajectories.push_back(std::move(tr));
    }
    out.emplace(src_idx, std::move(trajectories));
  }
  return out;
}

std::vector<Trajectory> MorseProblem::count_rigid_trajectories(const CriticalPoint& src,
                                                               const CriticalPoint& dst) const {
  if (src.index != dst.index + 1)
    throw DomainError("count_rigid_trajectories: indices must differ by one (src above dst)");
  std::vector<CriticalPoint> cps = find_critical_points();
  auto locate = [&](const CriticalPoint& q) -> std::size_t {
    for (std::size_t i = 0; i < cps.size(); ++i)
      if (dist_circ(cps[i].a, cps[i].theta, q.a, q.theta) < 10 * params_.merge_radius) return i;
    throw DomainError("count_rigid_trajectories: point is not a critical point of this problem");
  };
  std::size_t src_idx = locate(src);
  return fan_trajectories(cps, locate(dst), params_.n_fan).at(src_idx);
}

std::map<std::pair<std::size_t, std::size_t>, std::vector<Trajectory>>
MorseProblem::all_rigid_trajectories(const std::vector<CriticalPoint>& cps) const {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Trajectory>> out;
  for (std::size_t d = 0; d < cps.size(); ++d) {
    bool has_src = false;
    for (const CriticalPoint& cp : cps) has_src |= cp.index == cps[d].index + 1;
    if (!has_src) continue;
    for (auto& [s, trs] : fan_trajectories(cps, d, params_.n_fan)) out[{s, d}] = std::move(trs);
  }
  return out;
}

LaurentBimonomial winding_to_coefficient(const Trajectory& t) {
  return {-t.winding, t.winding};
}

}  // namespace braidhom
