#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "riemann_bounds/bloodflow.hpp"
#include "riemann_bounds/euler.hpp"
#include "riemann_bounds/shallow.hpp"

namespace riemann_bounds::cli {

/// Command-line overrides for the physical constants; unset keeps defaults.
struct ParamOverrides {
  std::optional<double> gamma;
  std::optional<double> gravity;
  std::optional<double> beta;
  std::optional<double> rho_blood;
};

struct AnyProblem {
  System system = System::Euler;
  std::variant<euler::Problem, shallow::Problem, bloodflow::Problem> problem;
};

/// Star value (p, h or A), star velocity, pattern and exact extreme speeds.
struct StarState {
  double x_star = 0.0;
  double u_star = 0.0;
  WavePattern pattern = WavePattern::RR;
  double s_left = 0.0;
  double s_right = 0.0;
};

/// Number of primitive variables per state (3 for Euler, 2 otherwise).
std::size_t state_size(System system);
/// "p", "h" or "A".
std::string_view star_variable(System system);

/// Throws ParseError on a wrong component count; the solvers validate the
/// values themselves.
AnyProblem make_problem(System system, std::span<const double> left,
                        std::span<const double> right,
                        const ParamOverrides& overrides = {});

StarState solve(const AnyProblem& p);
SpeedBounds estimate(const AnyProblem& p, EstimatorId id);
WavePattern classify(const AnyProblem& p);
/// Two-rarefaction star value.
double two_rarefaction(const AnyProblem& p);
/// max(|u_L|, |u_R|) + max(c_L, c_R); the scale for relative tolerances.
double characteristic_speed(const AnyProblem& p);
AnyProblem mirrored(const AnyProblem& p);

/// {left:{...}, right:{...}, params:{...}} with named components.
nlohmann::json problem_json(const AnyProblem& p);

}  // namespace riemann_bounds::cli
