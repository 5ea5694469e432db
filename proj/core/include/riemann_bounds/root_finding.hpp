#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "riemann_bounds/errors.hpp"

namespace riemann_bounds {

struct RootOptions {
  double rel_tol = 1e-12;
  int max_iter = 100;
};

/// A sign-changing interval. Either endpoint may be an exact root.
struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

/// Function value together with its derivative. Callables returning this
/// get Newton steps; plain scalar callables get secant steps.
struct ValueSlope {
  double value = 0.0;
  double slope = 0.0;
};

/// A sample (x, f(x)) of a wave-curve function.
struct CurvePoint {
  double x = 0.0;
  double f = 0.0;
};

/// Throws InvalidBracket unless lo < hi and the end values do not share a
/// strict sign.
void validate_bracket(const RootBracket& bracket);

/// Root of the chord through `p1` and `p2`, i.e. x1 - (x2 - x1)/(f2 - f1)*f1.
/// Returns x1 exactly when f1 == 0.
double interpolate_root(CurvePoint p1, CurvePoint p2);

namespace detail {

template <class F>
ValueSlope evaluate(F& f, double x) {
  using R = std::invoke_result_t<F&, double>;
  if constexpr (std::is_same_v<std::remove_cvref_t<R>, ValueSlope>) {
    return f(x);
  } else {
    return {static_cast<double>(f(x)), std::nan("")};
  }
}

}  // namespace detail

template <class F>
RootBracket make_bracket(F&& f, double lo, double hi) {
  RootBracket b{lo, hi, detail::evaluate(f, lo).value,
                detail::evaluate(f, hi).value};
  validate_bracket(b);
  return b;
}

/// Safeguarded Newton (or secant) iteration on a bracketed root.
///
/// An iterate that leaves the current bracket is replaced by a bisection
/// step, as is any step taken after the residual failed to halve over the
/// previous two iterations. On
/// positive brackets spanning more than a factor of four the bisection is
/// geometric, which keeps wide pressure ranges cheap.
template <class F>
double find_root(F&& f, RootBracket bracket, RootOptions opts = {},
                 std::optional<double> guess = std::nullopt) {
  validate_bracket(bracket);
  if (!(opts.rel_tol > 0.0)) throw InvalidBracket("rel_tol must be positive");
  if (bracket.f_lo == 0.0) return bracket.lo;
  if (bracket.f_hi == 0.0) return bracket.hi;

  double lo = bracket.lo, hi = bracket.hi;
  const bool increasing = bracket.f_lo < 0.0;
  // The smaller end: one far endpoint can make the larger residual useless as a scale.
  const double f_scale = std::min(std::abs(bracket.f_lo), std::abs(bracket.f_hi));

  auto bisect = [&] {
    if (lo > 0.0 && hi > 4.0 * lo) return std::sqrt(lo) * std::sqrt(hi);
    return lo + 0.5 * (hi - lo);
  };

  double x = guess && *guess > lo && *guess < hi ? *guess : bisect();
  double x_prev = std::nan("");
  double f_prev = std::nan("");
  double f_two_back = std::nan("");

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    const ValueSlope v = detail::evaluate(f, x);
    if (v.value == 0.0) return x;
    if ((v.value < 0.0) == increasing) {
      lo = x;
    } else {
      hi = x;
    }
    if (std::abs(v.value) <= opts.rel_tol * f_scale ||
        hi - lo <= opts.rel_tol * std::abs(x)) {
      return x;
    }

    double next = std::nan("");
    if (std::isfinite(v.slope) && v.slope != 0.0) {
      next = x - v.value / v.slope;
    } else if (std::isfinite(f_prev) && f_prev != v.value) {
      next = x - v.value * (x - x_prev) / (v.value - f_prev);
    }
    if (std::isfinite(next) && std::abs(next - x) <= opts.rel_tol * std::abs(x)) {
      return next;
    }

    const bool stalled = std::abs(v.value) > 0.5 * std::abs(f_two_back);
    if (stalled || !std::isfinite(next) || next <= lo || next >= hi) {
      next = bisect();
    }
    f_two_back = f_prev;
    x_prev = x;
    f_prev = v.value;
    x = next;
  }
  throw NoConvergence("find_root: no convergence after " +
                      std::to_string(opts.max_iter) + " iterations");
}

}  // namespace riemann_bounds
