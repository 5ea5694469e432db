#pragma once

#include "riemann_bounds/root_finding.hpp"
#include "riemann_bounds/types.hpp"

namespace riemann_bounds::bloodflow {

/// Cross-sectional area a > 0 (cm^2) and velocity u (cm/s).
struct State {
  double a = 1.0;
  double u = 0.0;
};

/// CGS units throughout.
struct Params {
  double beta = 28209.4792;
  double rho = 1.05;
  /// Area at which the TMS_d extrapolation is anchored; see
  /// shallow::Params::dry_depth.
  double collapse_area = 1e-12;

  /// beta / (3 rho)
  double gamma() const;
  /// sqrt(beta / (2 rho)); wave speed is zeta * a^(1/4).
  double zeta() const;
};

struct Problem {
  State left;
  State right;
  Params params;
};

struct ExactSolution {
  double a_star = 0.0;
  double u_star = 0.0;
  WavePattern pattern = WavePattern::RR;
  double s_left = 0.0;
  double s_right = 0.0;
};

void validate(const Problem& problem);

double wave_speed(double a, const Params& params);

double f_side(double a, const State& k, const Params& params);
ValueSlope f_side_slope(double a, const State& k, const Params& params);

/// f_L(A) + f_R(A) + u_R - u_L.
double area_function(double a, const Problem& problem);
double area_function_rarefaction(double a, const Problem& problem);

/// 4c_L + 4c_R > u_R - u_L.
bool check_positivity(const Problem& problem);

/// Throws CollapseData.
double two_rarefaction_area(const Problem& problem);

/// Vacuum stands for a collapsed vessel.
WavePattern classify(const Problem& problem);

double q_factor(double a, const State& k, const Params& params);

/// Throws CollapseData.
ExactSolution solve_exact(const Problem& problem, RootOptions opts = {});

SpeedBounds estimate(const Problem& problem, EstimatorId estimator);

Problem mirrored(const Problem& problem);

}  // namespace riemann_bounds::bloodflow
