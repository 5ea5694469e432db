#pragma once

#include "riemann_bounds/root_finding.hpp"
#include "riemann_bounds/types.hpp"

namespace riemann_bounds::shallow {

/// Depth h > 0 and velocity u.
struct State {
  double h = 1.0;
  double u = 0.0;
};

struct Params {
  double g = 9.8;
  /// Depth at which the TMS_d extrapolation is anchored, i.e. the alpha*c_K
  /// terms read alpha*(c_K - c(dry_depth)). Zero gives the plain formula.
  double dry_depth = 1e-12;
};

struct Problem {
  State left;
  State right;
  Params params;
};

struct ExactSolution {
  double h_star = 0.0;
  double u_star = 0.0;
  WavePattern pattern = WavePattern::RR;
  double s_left = 0.0;
  double s_right = 0.0;
};

void validate(const Problem& problem);

/// Celerity sqrt(g h).
double celerity(double h, const Params& params);

double f_side(double h, const State& k, const Params& params);
ValueSlope f_side_slope(double h, const State& k, const Params& params);

/// f_L(h) + f_R(h) + u_R - u_L.
double depth_function(double h, const Problem& problem);
/// The same function with both branches forced to rarefaction form.
double depth_function_rarefaction(double h, const Problem& problem);

/// 2c_L + 2c_R > u_R - u_L.
bool check_positivity(const Problem& problem);

/// Throws DryBed.
double two_rarefaction_depth(const Problem& problem);

/// Vacuum stands for a dry bed.
WavePattern classify(const Problem& problem);

double q_factor(double h, const State& k, const Params& params);

/// Throws DryBed.
ExactSolution solve_exact(const Problem& problem, RootOptions opts = {});

/// Throws UnsupportedEstimator for Einfeldt and Batten.
SpeedBounds estimate(const Problem& problem, EstimatorId estimator);

Problem mirrored(const Problem& problem);

}  // namespace riemann_bounds::shallow
