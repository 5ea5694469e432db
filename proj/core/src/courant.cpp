#include "riemann_bounds/courant.hpp"

#include <cmath>
#include <stdexcept>

#include "riemann_bounds/errors.hpp"

namespace riemann_bounds {

double courant_dt(std::span<const SpeedBounds> speeds, double dx, double c_cfl) {
  if (speeds.empty()) throw std::invalid_argument("courant_dt: no speeds");
  if (!(dx > 0.0)) throw std::invalid_argument("courant_dt: dx must be positive");
  if (!(c_cfl > 0.0 && c_cfl <= 1.0)) {
    throw std::invalid_argument("courant_dt: c_cfl must lie in (0, 1]");
  }
  double s_max = 0.0;
  for (const SpeedBounds& s : speeds) {
    s_max = std::fmax(s_max, std::fmax(std::abs(s.s_left), std::abs(s.s_right)));
  }
  if (s_max == 0.0) throw ZeroMaxSpeed("courant_dt: all wave speeds are zero");
  return c_cfl * dx / s_max;
}

}  // namespace riemann_bounds
