#pragma once

#include "riemann_bounds/root_finding.hpp"
#include "riemann_bounds/types.hpp"

namespace riemann_bounds::euler {

/// Primitive ideal-gas state. rho > 0 and p > 0.
struct State {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
};

struct Params {
  double gamma = 1.4;
};

struct Problem {
  State left;
  State right;
  Params params;
};

struct ExactSolution {
  double p_star = 0.0;
  double u_star = 0.0;
  WavePattern pattern = WavePattern::RR;
  double s_left = 0.0;
  double s_right = 0.0;
};

/// Throws InvalidInput if a state or gamma violates its invariant.
void validate(const Problem& problem);

double sound_speed(const State& s, const Params& params);
double total_energy(const State& s, const Params& params);
/// Total specific enthalpy (E + p) / rho.
double enthalpy(const State& s, const Params& params);

/// Wave curve through side state `k`: shock branch for p > p_k, rarefaction
/// branch otherwise.
double f_side(double p, const State& k, const Params& params);
ValueSlope f_side_slope(double p, const State& k, const Params& params);

/// f_L(p) + f_R(p) + u_R - u_L. Its root is the star pressure.
double pressure_function(double p, const Problem& problem);

/// 2c_L/(gamma-1) + 2c_R/(gamma-1) > u_R - u_L.
bool check_positivity(const Problem& problem);

/// Closed-form star pressure assuming two rarefactions; never below p_*.
/// Throws VacuumData.
double two_rarefaction_pressure(const Problem& problem);

/// Vacuum when positivity fails, otherwise decided from the signs of the
/// pressure function at min(p_L, p_R) and max(p_L, p_R).
WavePattern classify(const Problem& problem);

/// Shock speed multiplier: a left shock moves at u_L - c_L q_L(p_*).
double q_factor(double p, const State& k, const Params& params);

/// Throws VacuumData.
ExactSolution solve_exact(const Problem& problem, RootOptions opts = {});

/// Throws UnsupportedEstimator for TmsD, VacuumData on vacuum data.
SpeedBounds estimate(const Problem& problem, EstimatorId estimator);

/// Mirror image: sides swapped and velocities negated.
Problem mirrored(const Problem& problem);

}  // namespace riemann_bounds::euler
