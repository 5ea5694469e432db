#pragma once

#include <cmath>
#include <random>

#include "riemann_bounds/bloodflow.hpp"
#include "riemann_bounds/euler.hpp"
#include "riemann_bounds/shallow.hpp"

// Random non-degenerate Riemann problems for the property tests.
namespace ensembles {

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline riemann_bounds::euler::Problem euler(std::mt19937_64& rng) {
  using namespace riemann_bounds::euler;
  while (true) {
    Problem p{{log_uniform(rng, 1e-3, 1e3), uniform(rng, -100, 100), log_uniform(rng, 1e-3, 1e3)},
              {log_uniform(rng, 1e-3, 1e3), uniform(rng, -100, 100), log_uniform(rng, 1e-3, 1e3)},
              {}};
    if (check_positivity(p)) return p;
  }
}

inline riemann_bounds::shallow::Problem swe(std::mt19937_64& rng) {
  using namespace riemann_bounds::shallow;
  while (true) {
    Problem p{{log_uniform(rng, 1e-3, 1e2), uniform(rng, -20, 20)},
              {log_uniform(rng, 1e-3, 1e2), uniform(rng, -20, 20)},
              {}};
    if (check_positivity(p)) return p;
  }
}

inline riemann_bounds::bloodflow::Problem bfe(std::mt19937_64& rng) {
  using namespace riemann_bounds::bloodflow;
  while (true) {
    Problem p{{log_uniform(rng, 1e-2, 10), uniform(rng, -300, 300)},
              {log_uniform(rng, 1e-2, 10), uniform(rng, -300, 300)},
              {}};
    if (check_positivity(p)) return p;
  }
}

}  // namespace ensembles
