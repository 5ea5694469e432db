#pragma once

// Pattern classification, exact speeds and the TMS bound constructions are
// identical for the three systems once each one supplies its wave curves and
// shock factors. A model provides
//
//   Side left, right;                 // x = p, h or A; wave speed c
//   double x_rr;                      // two-rarefaction star value
//   double f_left(double), f_right(double);
//   ValueSlope f_slope(double);       // full wave-curve function
//   double q_left(double), q_right(double);

#include <cmath>
#include <limits>

#include "riemann_bounds/errors.hpp"
#include "riemann_bounds/root_finding.hpp"
#include "riemann_bounds/types.hpp"

namespace riemann_bounds::detail {

struct Side {
  double x = 0.0;
  double u = 0.0;
  double c = 0.0;
};

struct PatternData {
  WavePattern pattern = WavePattern::RR;
  CurvePoint min;
  CurvePoint max;  // f is NaN when the pattern is RR (never evaluated)
};

struct StarSolution {
  double x_star = 0.0;
  double u_star = 0.0;
  WavePattern pattern = WavePattern::RR;
  double s_left = 0.0;
  double s_right = 0.0;
};

template <class M>
double wave_curve(const M& m, double x) {
  return m.f_left(x) + m.f_right(x) + (m.right.u - m.left.u);
}

// Ties resolve to min = right, so equal values never produce a mixed
// pattern. f(x_min) == 0 counts as two rarefactions.
template <class M>
PatternData classify_pattern(const M& m) {
  const bool right_is_min = m.right.x <= m.left.x;
  const double x_min = right_is_min ? m.right.x : m.left.x;
  const double x_max = right_is_min ? m.left.x : m.right.x;
  PatternData d;
  d.min = {x_min, wave_curve(m, x_min)};
  d.max = {x_max, std::numeric_limits<double>::quiet_NaN()};
  if (d.min.f >= 0.0) {
    d.pattern = WavePattern::RR;
    return d;
  }
  d.max.f = wave_curve(m, x_max);
  if (d.max.f < 0.0) {
    d.pattern = WavePattern::SS;
  } else {
    d.pattern = right_is_min ? WavePattern::RS : WavePattern::SR;
  }
  return d;
}

template <class M>
double left_speed_at(const M& m, double x_star) {
  return x_star > m.left.x ? m.left.u - m.left.c * m.q_left(x_star)
                           : m.left.u - m.left.c;
}

template <class M>
double right_speed_at(const M& m, double x_star) {
  return x_star > m.right.x ? m.right.u + m.right.c * m.q_right(x_star)
                            : m.right.u + m.right.c;
}

template <class M>
StarSolution solve_star(const M& m, const RootOptions& opts) {
  const PatternData d = classify_pattern(m);
  StarSolution s;
  s.pattern = d.pattern;
  if (d.pattern == WavePattern::RR) {
    // Both branches are rarefactions, where the closed form is exact.
    s.x_star = m.x_rr;
  } else {
    const CurvePoint lo = d.pattern == WavePattern::SS ? d.max : d.min;
    double hi = m.x_rr;
    double f_hi = wave_curve(m, hi);
    for (int i = 0; f_hi < 0.0 && i < 64; ++i) {
      hi = 2.0 * hi;
      f_hi = wave_curve(m, hi);
    }
    auto f = [&m](double x) { return m.f_slope(x); };
    s.x_star = find_root(f, RootBracket{lo.x, hi, lo.f, f_hi}, opts, hi);
  }
  s.u_star = 0.5 * (m.left.u + m.right.u) +
             0.5 * (m.f_right(s.x_star) - m.f_left(s.x_star));
  s.s_left = left_speed_at(m, s.x_star);
  s.s_right = right_speed_at(m, s.x_star);
  return s;
}

template <class M>
SpeedBounds eigen_bounds(const M& m) {
  return {m.left.u - m.left.c, m.right.u + m.right.c, EstimatorId::DavisA, {}};
}

template <class M>
SpeedBounds davis_b(const M& m) {
  return {std::fmin(m.left.u - m.left.c, m.right.u - m.right.c),
          std::fmax(m.left.u + m.left.c, m.right.u + m.right.c),
          EstimatorId::DavisB,
          {}};
}

// Shock factors evaluated at the two-rarefaction value, q = 1 on a side
// where that value does not exceed the data.
template <class M>
SpeedBounds toro(const M& m) {
  const double ql = m.x_rr <= m.left.x ? 1.0 : m.q_left(m.x_rr);
  const double qr = m.x_rr <= m.right.x ? 1.0 : m.q_right(m.x_rr);
  return {m.left.u - m.left.c * ql, m.right.u + m.right.c * qr,
          EstimatorId::Toro, {}};
}

// Bounds from a star value known to lie at or above the true one. Only the
// shock sides use it.
template <class M>
SpeedBounds bounds_from_upper_star(const M& m, WavePattern pattern, double x) {
  SpeedBounds b = eigen_bounds(m);
  if (pattern == WavePattern::SR || pattern == WavePattern::SS) {
    b.s_left = m.left.u - m.left.c * m.q_left(x);
  }
  if (pattern == WavePattern::RS || pattern == WavePattern::SS) {
    b.s_right = m.right.u + m.right.c * m.q_right(x);
  }
  b.pattern = pattern;
  return b;
}

template <class M>
CurvePoint rr_point(const M& m) {
  return {m.x_rr, wave_curve(m, m.x_rr)};
}

template <class M>
SpeedBounds tms_a(const M& m) {
  const PatternData d = classify_pattern(m);
  double x = 0.0;
  switch (d.pattern) {
    case WavePattern::RS:
    case WavePattern::SR:
      x = interpolate_root(d.min, d.max);
      break;
    case WavePattern::SS:
      x = interpolate_root(d.max, rr_point(m));
      break;
    default:
      break;
  }
  SpeedBounds b = bounds_from_upper_star(m, d.pattern, x);
  b.estimator = EstimatorId::TmsA;
  return b;
}

template <class M>
SpeedBounds tms_b(const M& m) {
  const PatternData d = classify_pattern(m);
  const double x = d.pattern == WavePattern::RR
                       ? 0.0
                       : interpolate_root(d.min, rr_point(m));
  SpeedBounds b = bounds_from_upper_star(m, d.pattern, x);
  b.estimator = EstimatorId::TmsB;
  return b;
}

// The mixed cases evaluate the shock factor at the larger data value. The
// two-shock case differs between systems and is passed in.
template <class M, class SsBounds>
SpeedBounds tms_c(const M& m, SsBounds&& ss) {
  const PatternData d = classify_pattern(m);
  SpeedBounds b = eigen_bounds(m);
  switch (d.pattern) {
    case WavePattern::RS:
      b.s_right = m.right.u + m.right.c * m.q_right(m.left.x);
      break;
    case WavePattern::SR:
      b.s_left = m.left.u - m.left.c * m.q_left(m.right.x);
      break;
    case WavePattern::SS:
      b = ss(m);
      break;
    default:
      break;
  }
  b.estimator = EstimatorId::TmsC;
  b.pattern = d.pattern;
  return b;
}

// Pattern-free bound; c_floor is the wave speed at the near-dry anchor.
template <class M>
SpeedBounds tms_d(const M& m, double alpha, double c_floor) {
  return {std::fmin(m.left.u - m.left.c, m.right.u - alpha * (m.right.c - c_floor)),
          std::fmax(m.right.u + m.right.c, m.left.u + alpha * (m.left.c - c_floor)),
          EstimatorId::TmsD,
          {}};
}

template <class M>
SpeedBounds exact_bounds(const M& m, const RootOptions& opts = {}) {
  const StarSolution s = solve_star(m, opts);
  return {s.s_left, s.s_right, EstimatorId::Exact, s.pattern};
}

}  // namespace riemann_bounds::detail
