#include "cli/dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cli/commands.hpp"

namespace riemann_bounds::cli {

std::size_t state_size(System system) { return system == System::Euler ? 3 : 2; }

std::string_view star_variable(System system) {
  switch (system) {
    case System::Euler: return "p";
    case System::Swe: return "h";
    case System::Bfe: return "A";
  }
  return "x";
}

AnyProblem make_problem(System system, std::span<const double> left,
                        std::span<const double> right,
                        const ParamOverrides& overrides) {
  const std::size_t n = state_size(system);
  if (left.size() != n || right.size() != n) {
    throw ParseError(std::string(to_string(system)) + " states need " +
                     std::to_string(n) + " comma-separated values");
  }
  AnyProblem out;
  out.system = system;
  switch (system) {
    case System::Euler: {
      euler::Problem p{{left[0], left[1], left[2]}, {right[0], right[1], right[2]}, {}};
      if (overrides.gamma) p.params.gamma = *overrides.gamma;
      out.problem = p;
      break;
    }
    case System::Swe: {
      shallow::Problem p{{left[0], left[1]}, {right[0], right[1]}, {}};
      if (overrides.gravity) p.params.g = *overrides.gravity;
      out.problem = p;
      break;
    }
    case System::Bfe: {
      bloodflow::Problem p{{left[0], left[1]}, {right[0], right[1]}, {}};
      if (overrides.beta) p.params.beta = *overrides.beta;
      if (overrides.rho_blood) p.params.rho = *overrides.rho_blood;
      out.problem = p;
      break;
    }
  }
  return out;
}

StarState solve(const AnyProblem& any) {
  return std::visit(
      [](const auto& p) -> StarState {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, euler::Problem>) {
          const auto s = euler::solve_exact(p);
          return {s.p_star, s.u_star, s.pattern, s.s_left, s.s_right};
        } else if constexpr (std::is_same_v<P, shallow::Problem>) {
          const auto s = shallow::solve_exact(p);
          return {s.h_star, s.u_star, s.pattern, s.s_left, s.s_right};
        } else {
          const auto s = bloodflow::solve_exact(p);
          return {s.a_star, s.u_star, s.pattern, s.s_left, s.s_right};
        }
      },
      any.problem);
}

SpeedBounds estimate(const AnyProblem& any, EstimatorId id) {
  return std::visit(
      [id](const auto& p) -> SpeedBounds {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, euler::Problem>) {
          return euler::estimate(p, id);
        } else if constexpr (std::is_same_v<P, shallow::Problem>) {
          return shallow::estimate(p, id);
        } else {
          return bloodflow::estimate(p, id);
        }
      },
      any.problem);
}

WavePattern classify(const AnyProblem& any) {
  return std::visit(
      [](const auto& p) -> WavePattern {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, euler::Problem>) {
          return euler::classify(p);
        } else if constexpr (std::is_same_v<P, shallow::Problem>) {
          return shallow::classify(p);
        } else {
          return bloodflow::classify(p);
        }
      },
      any.problem);
}

double two_rarefaction(const AnyProblem& any) {
  return std::visit(
      [](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, euler::Problem>) {
          return euler::two_rarefaction_pressure(p);
        } else if constexpr (std::is_same_v<P, shallow::Problem>) {
          return shallow::two_rarefaction_depth(p);
        } else {
          return bloodflow::two_rarefaction_area(p);
        }
      },
      any.problem);
}

double characteristic_speed(const AnyProblem& any) {
  return std::visit(
      [](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        double cl = 0.0, cr = 0.0;
        if constexpr (std::is_same_v<P, euler::Problem>) {
          cl = euler::sound_speed(p.left, p.params);
          cr = euler::sound_speed(p.right, p.params);
        } else if constexpr (std::is_same_v<P, shallow::Problem>) {
          cl = shallow::celerity(p.left.h, p.params);
          cr = shallow::celerity(p.right.h, p.params);
        } else {
          cl = bloodflow::wave_speed(p.left.a, p.params);
          cr = bloodflow::wave_speed(p.right.a, p.params);
        }
        return std::max(std::abs(p.left.u), std::abs(p.right.u)) + std::max(cl, cr);
      },
      any.problem);
}

AnyProblem mirrored(const AnyProblem& any) {
  AnyProblem out = any;
  std::visit(
      [&out](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, euler::Problem>) {
          out.problem = euler::mirrored(p);
        } else if constexpr (std::is_same_v<P, shallow::Problem>) {
          out.problem = shallow::mirrored(p);
        } else {
          out.problem = bloodflow::mirrored(p);
        }
      },
      any.problem);
  return out;
}

nlohmann::json problem_json(const AnyProblem& any) {
  return std::visit(
      [](const auto& p) -> nlohmann::json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, euler::Problem>) {
          auto state = [](const euler::State& s) {
            return nlohmann::json{{"rho", s.rho}, {"u", s.u}, {"p", s.p}};
          };
          return {{"left", state(p.left)},
                  {"right", state(p.right)},
                  {"params", {{"gamma", p.params.gamma}}}};
        } else if constexpr (std::is_same_v<P, shallow::Problem>) {
          auto state = [](const shallow::State& s) {
            return nlohmann::json{{"h", s.h}, {"u", s.u}};
          };
          return {{"left", state(p.left)},
                  {"right", state(p.right)},
                  {"params", {{"g", p.params.g}}}};
        } else {
          auto state = [](const bloodflow::State& s) {
            return nlohmann::json{{"A", s.a}, {"u", s.u}};
          };
          return {{"left", state(p.left)},
                  {"right", state(p.right)},
                  {"params", {{"beta", p.params.beta}, {"rho", p.params.rho}}}};
        }
      },
      any.problem);
}

}  // namespace riemann_bounds::cli
