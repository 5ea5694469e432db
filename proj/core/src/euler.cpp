#include "riemann_bounds/euler.hpp"

#include <cmath>
#include <string>

#include "riemann_bounds/errors.hpp"
#include "wave_bounds.hpp"

namespace riemann_bounds::euler {
namespace {

void check_state(const State& s, const char* side) {
  if (!(std::isfinite(s.rho) && s.rho > 0.0 && std::isfinite(s.p) && s.p > 0.0 &&
        std::isfinite(s.u))) {
    throw InvalidInput(std::string("euler: ") + side +
                       " state needs finite rho > 0, p > 0 and u");
  }
}

struct Model {
  detail::Side left, right;
  State sl, sr;
  Params params;
  double x_rr = 0.0;

  double f_left(double p) const { return f_side(p, sl, params); }
  double f_right(double p) const { return f_side(p, sr, params); }
  ValueSlope f_slope(double p) const {
    const ValueSlope l = f_side_slope(p, sl, params);
    const ValueSlope r = f_side_slope(p, sr, params);
    return {l.value + r.value + (sr.u - sl.u), l.slope + r.slope};
  }
  double q_left(double p) const { return q_factor(p, sl, params); }
  double q_right(double p) const { return q_factor(p, sr, params); }
};

Model make_model(const Problem& pr) {
  validate(pr);
  if (!check_positivity(pr)) {
    throw VacuumData("euler: data violate the pressure positivity condition");
  }
  Model m;
  m.sl = pr.left;
  m.sr = pr.right;
  m.params = pr.params;
  m.left = {pr.left.p, pr.left.u, sound_speed(pr.left, pr.params)};
  m.right = {pr.right.p, pr.right.u, sound_speed(pr.right, pr.params)};
  m.x_rr = two_rarefaction_pressure(pr);
  return m;
}

// Roe-averaged velocity and the sqrt(rho) weights.
struct RoeWeights {
  double wl, wr, u;
};

RoeWeights roe(const State& l, const State& r) {
  const double wl = std::sqrt(l.rho), wr = std::sqrt(r.rho);
  return {wl, wr, (wl * l.u + wr * r.u) / (wl + wr)};
}

SpeedBounds einfeldt(const Model& m) {
  const RoeWeights w = roe(m.sl, m.sr);
  const double cl = m.left.c, cr = m.right.c;
  const double du = m.sr.u - m.sl.u;
  const double d2 = (w.wl * cl * cl + w.wr * cr * cr) / (w.wl + w.wr) +
                    0.5 * w.wl * w.wr / ((w.wl + w.wr) * (w.wl + w.wr)) * du * du;
  const double d = std::sqrt(d2);
  return {w.u - d, w.u + d, EstimatorId::Einfeldt, {}};
}

SpeedBounds batten(const Model& m) {
  const RoeWeights w = roe(m.sl, m.sr);
  const double h = (w.wl * enthalpy(m.sl, m.params) + w.wr * enthalpy(m.sr, m.params)) /
                   (w.wl + w.wr);
  const double c = std::sqrt((m.params.gamma - 1.0) * (h - 0.5 * w.u * w.u));
  return {std::fmin(m.left.u - m.left.c, w.u - c),
          std::fmax(m.right.u + m.right.c, w.u + c), EstimatorId::Batten, {}};
}

}  // namespace

void validate(const Problem& problem) {
  check_state(problem.left, "left");
  check_state(problem.right, "right");
  if (!(problem.params.gamma > 1.0) || !std::isfinite(problem.params.gamma)) {
    throw InvalidInput("euler: gamma must exceed 1");
  }
}

double sound_speed(const State& s, const Params& params) {
  return std::sqrt(params.gamma * s.p / s.rho);
}

double total_energy(const State& s, const Params& params) {
  return s.p / (params.gamma - 1.0) + 0.5 * s.rho * s.u * s.u;
}

double enthalpy(const State& s, const Params& params) {
  return (total_energy(s, params) + s.p) / s.rho;
}

double f_side(double p, const State& k, const Params& params) {
  return f_side_slope(p, k, params).value;
}

ValueSlope f_side_slope(double p, const State& k, const Params& params) {
  const double g = params.gamma;
  if (p > k.p) {
    const double a = 2.0 / ((g + 1.0) * k.rho);
    const double b = (g - 1.0) / (g + 1.0) * k.p;
    const double root = std::sqrt(a / (p + b));
    return {(p - k.p) * root, root * (1.0 - 0.5 * (p - k.p) / (p + b))};
  }
  const double c = sound_speed(k, params);
  const double ratio = p / k.p;
  return {2.0 * c / (g - 1.0) * (std::pow(ratio, 0.5 * (g - 1.0) / g) - 1.0),
          std::pow(ratio, -0.5 * (g + 1.0) / g) / (k.rho * c)};
}

double pressure_function(double p, const Problem& problem) {
  return f_side(p, problem.left, problem.params) +
         f_side(p, problem.right, problem.params) +
         (problem.right.u - problem.left.u);
}

bool check_positivity(const Problem& problem) {
  const double g = problem.params.gamma;
  const double cl = sound_speed(problem.left, problem.params);
  const double cr = sound_speed(problem.right, problem.params);
  return 2.0 * cl / (g - 1.0) + 2.0 * cr / (g - 1.0) >
         problem.right.u - problem.left.u;
}

double two_rarefaction_pressure(const Problem& problem) {
  if (!check_positivity(problem)) {
    throw VacuumData("euler: data violate the pressure positivity condition");
  }
  const State& l = problem.left;
  const State& r = problem.right;
  const double g = problem.params.gamma;
  const double z = 0.5 * (g - 1.0) / g;
  const double cl = sound_speed(l, problem.params);
  const double cr = sound_speed(r, problem.params);
  const double num = cl + cr - 0.5 * (g - 1.0) * (r.u - l.u);
  const double den = cl / std::pow(l.p, z) + cr / std::pow(r.p, z);
  return std::pow(num / den, 1.0 / z);
}

WavePattern classify(const Problem& problem) {
  validate(problem);
  if (!check_positivity(problem)) return WavePattern::Vacuum;
  return detail::classify_pattern(make_model(problem)).pattern;
}

double q_factor(double p, const State& k, const Params& params) {
  const double g = params.gamma;
  return std::sqrt(1.0 + 0.5 * (g + 1.0) / g * (p / k.p - 1.0));
}

ExactSolution solve_exact(const Problem& problem, RootOptions opts) {
  const detail::StarSolution s = detail::solve_star(make_model(problem), opts);
  return {s.x_star, s.u_star, s.pattern, s.s_left, s.s_right};
}

SpeedBounds estimate(const Problem& problem, EstimatorId estimator) {
  if (!is_supported(System::Euler, estimator)) {
    throw UnsupportedEstimator("euler: estimator " +
                               std::string(to_string(estimator)) +
                               " is not defined for the Euler equations");
  }
  const Model m = make_model(problem);
  switch (estimator) {
    case EstimatorId::DavisA: return detail::eigen_bounds(m);
    case EstimatorId::DavisB: return detail::davis_b(m);
    case EstimatorId::Einfeldt: return einfeldt(m);
    case EstimatorId::Batten: return batten(m);
    case EstimatorId::Toro: return detail::toro(m);
    case EstimatorId::TmsA: return detail::tms_a(m);
    case EstimatorId::TmsB: return detail::tms_b(m);
    case EstimatorId::TmsC:
      return detail::tms_c(m, [](const Model& mm) {
        return SpeedBounds{mm.left.u - mm.left.c * mm.q_left(mm.x_rr),
                           mm.right.u + mm.right.c * mm.q_right(mm.x_rr),
                           EstimatorId::TmsC,
                           {}};
      });
    case EstimatorId::Exact: return detail::exact_bounds(m);
    default: break;
  }
  throw UnsupportedEstimator("euler: unhandled estimator");
}

Problem mirrored(const Problem& problem) {
  Problem out = problem;
  out.left = {problem.right.rho, -problem.right.u, problem.right.p};
  out.right = {problem.left.rho, -problem.left.u, problem.left.p};
  return out;
}

}  // namespace riemann_bounds::euler
