#include "riemann_bounds/bloodflow.hpp"

#include <cmath>
#include <string>

#include "riemann_bounds/errors.hpp"
#include "wave_bounds.hpp"

namespace riemann_bounds::bloodflow {
namespace {

void check_state(const State& s, const char* side) {
  if (!(std::isfinite(s.a) && s.a > 0.0 && std::isfinite(s.u))) {
    throw InvalidInput(std::string("bfe: ") + side +
                       " state needs finite A > 0 and u");
  }
}

struct Model {
  detail::Side left, right;
  State sl, sr;
  Params params;
  double x_rr = 0.0;

  double f_left(double a) const { return f_side(a, sl, params); }
  double f_right(double a) const { return f_side(a, sr, params); }
  ValueSlope f_slope(double a) const {
    const ValueSlope l = f_side_slope(a, sl, params);
    const ValueSlope r = f_side_slope(a, sr, params);
    return {l.value + r.value + (sr.u - sl.u), l.slope + r.slope};
  }
  double q_left(double a) const { return q_factor(a, sl, params); }
  double q_right(double a) const { return q_factor(a, sr, params); }
};

Model make_model(const Problem& pr) {
  validate(pr);
  Model m;
  m.sl = pr.left;
  m.sr = pr.right;
  m.params = pr.params;
  m.left = {pr.left.a, pr.left.u, wave_speed(pr.left.a, pr.params)};
  m.right = {pr.right.a, pr.right.u, wave_speed(pr.right.a, pr.params)};
  m.x_rr = two_rarefaction_area(pr);
  return m;
}

}  // namespace

double Params::gamma() const { return beta / (3.0 * rho); }
double Params::zeta() const { return std::sqrt(beta / (2.0 * rho)); }

void validate(const Problem& problem) {
  check_state(problem.left, "left");
  check_state(problem.right, "right");
  const Params& p = problem.params;
  if (!(p.beta > 0.0 && std::isfinite(p.beta) && p.rho > 0.0 && std::isfinite(p.rho))) {
    throw InvalidInput("bfe: beta and rho must be positive");
  }
  if (!(p.collapse_area >= 0.0)) {
    throw InvalidInput("bfe: collapse_area must be non-negative");
  }
}

double wave_speed(double a, const Params& params) {
  return params.zeta() * std::sqrt(std::sqrt(a));
}

double f_side(double a, const State& k, const Params& params) {
  return f_side_slope(a, k, params).value;
}

ValueSlope f_side_slope(double a, const State& k, const Params& params) {
  if (a > k.a) {
    const double gm = params.gamma();
    const double a15 = a * std::sqrt(a);
    const double k15 = k.a * std::sqrt(k.a);
    const double n = (a - k.a) * (a15 - k15);
    const double dn = (a15 - k15) + 1.5 * (a - k.a) * std::sqrt(a);
    const double value = std::sqrt(gm * n / (a * k.a));
    const double dg = gm / k.a * (dn * a - n) / (a * a);
    return {value, dg / (2.0 * value)};
  }
  const double c = wave_speed(a, params);
  return {4.0 * (c - wave_speed(k.a, params)), c / a};
}

double area_function(double a, const Problem& problem) {
  return f_side(a, problem.left, problem.params) +
         f_side(a, problem.right, problem.params) +
         (problem.right.u - problem.left.u);
}

double area_function_rarefaction(double a, const Problem& problem) {
  const Params& p = problem.params;
  const double c = wave_speed(a, p);
  return 4.0 * (c - wave_speed(problem.left.a, p)) +
         4.0 * (c - wave_speed(problem.right.a, p)) +
         (problem.right.u - problem.left.u);
}

bool check_positivity(const Problem& problem) {
  const Params& p = problem.params;
  return 4.0 * wave_speed(problem.left.a, p) + 4.0 * wave_speed(problem.right.a, p) >
         problem.right.u - problem.left.u;
}

double two_rarefaction_area(const Problem& problem) {
  const Params& p = problem.params;
  const double base =
      0.5 * (wave_speed(problem.left.a, p) + wave_speed(problem.right.a, p)) -
      0.125 * (problem.right.u - problem.left.u);
  if (!(base > 0.0)) throw CollapseData("bfe: data collapse the vessel");
  const double root = 2.0 * p.rho * base * base / p.beta;
  return root * root;
}

WavePattern classify(const Problem& problem) {
  validate(problem);
  if (!check_positivity(problem)) return WavePattern::Vacuum;
  return detail::classify_pattern(make_model(problem)).pattern;
}

// (y^{3/2} - 1)/(y - 1) is rewritten with s = sqrt(y) as
// (s^2 + s + 1)/(s + 1), which has no removable singularity at y = 1.
double q_factor(double a, const State& k, const Params&) {
  const double y = a / k.a;
  const double s = std::sqrt(y);
  return std::sqrt(2.0 * y * (s * s + s + 1.0) / (3.0 * (s + 1.0)));
}

ExactSolution solve_exact(const Problem& problem, RootOptions opts) {
  const detail::StarSolution s = detail::solve_star(make_model(problem), opts);
  return {s.x_star, s.u_star, s.pattern, s.s_left, s.s_right};
}

SpeedBounds estimate(const Problem& problem, EstimatorId estimator) {
  if (!is_supported(System::Bfe, estimator)) {
    throw UnsupportedEstimator("bfe: estimator " + std::string(to_string(estimator)) +
                               " is not defined for the blood-flow equations");
  }
  const Model m = make_model(problem);
  switch (estimator) {
    case EstimatorId::DavisA: return detail::eigen_bounds(m);
    case EstimatorId::DavisB: return detail::davis_b(m);
    case EstimatorId::Toro: return detail::toro(m);
    case EstimatorId::TmsA: return detail::tms_a(m);
    case EstimatorId::TmsB: return detail::tms_b(m);
    case EstimatorId::TmsC:
      return detail::tms_c(m, [](const Model& mm) {
        return SpeedBounds{mm.right.u - mm.right.c, mm.left.u + mm.left.c,
                           EstimatorId::TmsC, {}};
      });
    case EstimatorId::TmsD:
      return detail::tms_d(m, 4.0, wave_speed(m.params.collapse_area, m.params));
    case EstimatorId::Exact: return detail::exact_bounds(m);
    default: break;
  }
  throw UnsupportedEstimator("bfe: unhandled estimator");
}

Problem mirrored(const Problem& problem) {
  Problem out = problem;
  out.left = {problem.right.a, -problem.right.u};
  out.right = {problem.left.a, -problem.left.u};
  return out;
}

}  // namespace riemann_bounds::bloodflow
