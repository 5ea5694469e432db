#include "riemann_bounds/root_finding.hpp"

#include <cmath>

namespace riemann_bounds {

void validate_bracket(const RootBracket& b) {
  if (!(b.lo < b.hi)) throw InvalidBracket("bracket requires lo < hi");
  if (!std::isfinite(b.f_lo) || !std::isfinite(b.f_hi)) {
    throw InvalidBracket("non-finite function value at bracket end");
  }
  if (b.f_lo == 0.0 || b.f_hi == 0.0) return;
  if ((b.f_lo < 0.0) == (b.f_hi < 0.0)) {
    throw InvalidBracket("bracket ends have the same sign");
  }
}

double interpolate_root(CurvePoint p1, CurvePoint p2) {
  if (p1.f == 0.0) return p1.x;
  if (p1.x == p2.x || p1.f == p2.f) {
    throw DegeneratePoints("interpolate_root: coincident points");
  }
  return p1.x - (p2.x - p1.x) / (p2.f - p1.f) * p1.f;
}

}  // namespace riemann_bounds
