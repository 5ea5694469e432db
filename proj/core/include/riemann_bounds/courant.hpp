#pragma once

#include <span>

#include "riemann_bounds/types.hpp"

namespace riemann_bounds {

/// Largest stable explicit step, c_cfl * dx / max |s| over all interfaces.
/// Throws ZeroMaxSpeed when every speed is zero and std::invalid_argument on
/// bad dx, c_cfl or an empty list.
double courant_dt(std::span<const SpeedBounds> speeds, double dx, double c_cfl);

}  // namespace riemann_bounds
