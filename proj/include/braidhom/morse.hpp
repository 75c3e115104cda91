#ifndef BRAIDHOM_MORSE_HPP
#define BRAIDHOM_MORSE_HPP

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "braidhom/bimodule.hpp"

namespace braidhom {

// Which region of the a-line a critical point sits in.
enum class Tier { interior, ext_minus, ext_plus };  // c0, c-, c+

// Parameters of the model function h on ℝ_a × S¹_θ for a local 2-braid
// with twist exponent k:
//
//   h(a,θ) = -( ε₁ G(a) cos(θ + η_k(a)) + W(a) )
//
// G is an even radial profile, equal to exp(ε₀(|a|-U)) for |a| ≥ U and
// softened to exp(ε₀(sqrt(a²+m²)-sqrt(U²+m²))) inside, with a C² blend of
// the exponents over [U-blend_width, U]. η_k ramps from 0 on a ≤ 3U/5 to
// 2πk on a ≥ 4U/5 by a quintic smoothstep. W is the wrapping term
// ε₀ ∫₀^{|a|-U} e^{ε₀ x} H'(x) dx with H'(x) = (x - onset)₊², smoothed over
// kink_width at the onset.
struct MorseParams {
  long long k = 0;
  double U = 5.0;
  double eps0 = 0.1;
  double eps1 = 0.5;
  double softening = 1.0;    // m in the G profile
  double blend_width = 1.0;  // G exponent blend over [U - blend_width, U]
  double onset = 1.0;        // x1, where the wrapping derivative switches on
  double kink_width = 0.05;  // smoothing width of H' at the onset

  // Numerical knobs.
  int seeds_a = 200;
  int seeds_theta = 64;
  int n_fan = 720;
  double fan_radius = 1e-3;
  double tol_grad = 1e-9;
  double tol_degenerate = 1e-6;
  double tol_endpoint = 1e-3;
  double merge_radius = 1e-4;
  double ode_tol = 1e-9;

  double x_max() const;  // 2 (onset + sqrt(eps1)); sets the search window
};

struct CriticalPoint {
  double a = 0.0;
  double theta = 0.0;  // canonical representative in [0, 2π)
  double value = 0.0;
  int index = 0;  // number of negative Hessian eigenvalues
  std::array<double, 2> hess_eig{0.0, 0.0};
  Tier tier = Tier::interior;
};

// A rigid negative-gradient flow line, sampled in descent order (h strictly
// decreases along samples). θ is lifted continuously to ℝ.
struct Trajectory {
  std::vector<std::array<double, 2>> samples;  // (a, θ lifted)
  CriticalPoint src, dst;
  double dtheta = 0.0;  // θ(end) - θ(start)
  long long winding = 0;
};

class MorseProblem {
 public:
  explicit MorseProblem(MorseParams params);

  const MorseParams& params() const { return params_; }

  // Profile pieces, exposed for cross-checks.
  double profile_G(double a) const;
  double profile_G_da(double a) const;
  double profile_eta(double a) const;
  double profile_eta_da(double a) const;
  double wrap_Hp(double x) const;
  double wrap_W(double a) const;
  double wrap_W_da(double a) const;
  // Root x* of H'(x) = ε₁; the exterior critical points sit at ±(U + x*).
  double exterior_root() const;

  double eval_h(double a, double theta) const;
  std::array<double, 2> eval_grad(double a, double theta) const;
  // (h_aa, h_aθ, h_θθ) by central differences with the given step.
  std::array<double, 3> hessian_fd(double a, double theta, double step = 1e-4) const;

  // Newton iteration on eval_grad from a seed grid; merged, filtered to
  // positive critical value, classified by Hessian index and region.
  // Sorted by a. Throws NumericalError when an analytically predicted
  // point is missed or a Hessian is near-degenerate.
  std::vector<CriticalPoint> find_critical_points() const;

  // Rigid trajectories from src to dst (index difference exactly one).
  // Shooting fan of n_fan directions around the sink, clustered into
  // circularly connected components of the fan parameter; one trajectory
  // per component.
  std::vector<Trajectory> count_rigid_trajectories(const CriticalPoint& src,
                                                   const CriticalPoint& dst) const;

  // One fan per sink, grouped by (source index, sink index) into the
  // critical point list. Cheaper than repeated count_rigid_trajectories
  // calls when several pairs are needed.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Trajectory>> all_rigid_trajectories(
      const std::vector<CriticalPoint>& cps) const;

 private:
  MorseParams params_;
  double blend_const_ = 0.0;  // ∫ over the smoothing window of e^{ε₀s} H'(s) ds

  std::map<std::size_t, std::vector<Trajectory>> fan_trajectories(
      const std::vector<CriticalPoint>& cps, std::size_t dst_idx, int n_fan) const;
  friend struct FlowTracer;
};

// μ-coefficient carried by a trajectory: winding w becomes μ_x^{-w} μ_y^{w}.
LaurentBimonomial winding_to_coefficient(const Trajectory& t);

}  // namespace braidhom

#endif
