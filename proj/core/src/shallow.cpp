#include "riemann_bounds/shallow.hpp"

#include <cmath>
#include <string>

#include "riemann_bounds/errors.hpp"
#include "wave_bounds.hpp"

namespace riemann_bounds::shallow {
namespace {

void check_state(const State& s, const char* side) {
  if (!(std::isfinite(s.h) && s.h > 0.0 && std::isfinite(s.u))) {
    throw InvalidInput(std::string("swe: ") + side +
                       " state needs finite h > 0 and u");
  }
}

struct Model {
  detail::Side left, right;
  State sl, sr;
  Params params;
  double x_rr = 0.0;

  double f_left(double h) const { return f_side(h, sl, params); }
  double f_right(double h) const { return f_side(h, sr, params); }
  ValueSlope f_slope(double h) const {
    const ValueSlope l = f_side_slope(h, sl, params);
    const ValueSlope r = f_side_slope(h, sr, params);
    return {l.value + r.value + (sr.u - sl.u), l.slope + r.slope};
  }
  double q_left(double h) const { return q_factor(h, sl, params); }
  double q_right(double h) const { return q_factor(h, sr, params); }
};

Model make_model(const Problem& pr) {
  validate(pr);
  Model m;
  m.sl = pr.left;
  m.sr = pr.right;
  m.params = pr.params;
  m.left = {pr.left.h, pr.left.u, celerity(pr.left.h, pr.params)};
  m.right = {pr.right.h, pr.right.u, celerity(pr.right.h, pr.params)};
  m.x_rr = two_rarefaction_depth(pr);
  return m;
}

}  // namespace

void validate(const Problem& problem) {
  check_state(problem.left, "left");
  check_state(problem.right, "right");
  if (!(problem.params.g > 0.0) || !std::isfinite(problem.params.g)) {
    throw InvalidInput("swe: g must be positive");
  }
  if (!(problem.params.dry_depth >= 0.0)) {
    throw InvalidInput("swe: dry_depth must be non-negative");
  }
}

double celerity(double h, const Params& params) { return std::sqrt(params.g * h); }

double f_side(double h, const State& k, const Params& params) {
  return f_side_slope(h, k, params).value;
}

ValueSlope f_side_slope(double h, const State& k, const Params& params) {
  const double g = params.g;
  if (h > k.h) {
    const double s = std::sqrt(0.5 * g * (h + k.h) / (h * k.h));
    return {(h - k.h) * s, s - (h - k.h) * g / (4.0 * s * h * h)};
  }
  const double c = celerity(h, params);
  return {2.0 * (c - celerity(k.h, params)), g / c};
}

double depth_function(double h, const Problem& problem) {
  return f_side(h, problem.left, problem.params) +
         f_side(h, problem.right, problem.params) +
         (problem.right.u - problem.left.u);
}

double depth_function_rarefaction(double h, const Problem& problem) {
  const Params& p = problem.params;
  const double c = celerity(h, p);
  return 2.0 * (c - celerity(problem.left.h, p)) +
         2.0 * (c - celerity(problem.right.h, p)) +
         (problem.right.u - problem.left.u);
}

bool check_positivity(const Problem& problem) {
  const Params& p = problem.params;
  return 2.0 * celerity(problem.left.h, p) + 2.0 * celerity(problem.right.h, p) >
         problem.right.u - problem.left.u;
}

double two_rarefaction_depth(const Problem& problem) {
  const Params& p = problem.params;
  const double base = 0.5 * (celerity(problem.left.h, p) + celerity(problem.right.h, p)) +
                      0.25 * (problem.left.u - problem.right.u);
  if (!(base > 0.0)) throw DryBed("swe: data produce a dry bed");
  return base * base / p.g;
}

WavePattern classify(const Problem& problem) {
  validate(problem);
  if (!check_positivity(problem)) return WavePattern::Vacuum;
  return detail::classify_pattern(make_model(problem)).pattern;
}

double q_factor(double h, const State& k, const Params&) {
  const double y = h / k.h;
  return std::sqrt(0.5 * (y * y + y));
}

ExactSolution solve_exact(const Problem& problem, RootOptions opts) {
  const detail::StarSolution s = detail::solve_star(make_model(problem), opts);
  return {s.x_star, s.u_star, s.pattern, s.s_left, s.s_right};
}

SpeedBounds estimate(const Problem& problem, EstimatorId estimator) {
  if (!is_supported(System::Swe, estimator)) {
    throw UnsupportedEstimator("swe: estimator " + std::string(to_string(estimator)) +
                               " is not defined for the shallow-water equations");
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
      return detail::tms_d(m, 2.0, celerity(m.params.dry_depth, m.params));
    case EstimatorId::Exact: return detail::exact_bounds(m);
    default: break;
  }
  throw UnsupportedEstimator("swe: unhandled estimator");
}

Problem mirrored(const Problem& problem) {
  Problem out = problem;
  out.left = {problem.right.h, -problem.right.u};
  out.right = {problem.left.h, -problem.left.u};
  return out;
}

}  // namespace riemann_bounds::shallow
