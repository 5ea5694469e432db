#include <cmath>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "riemann_bounds/riemann_bounds.hpp"

namespace {

using namespace riemann_bounds;

// A fixed pool of random problems so timings cover every wave pattern.
template <class Problem, class Draw>
std::vector<Problem> pool(Draw draw) {
  std::mt19937_64 rng(1234);
  std::vector<Problem> out;
  while (out.size() < 1024) {
    Problem p = draw(rng);
    if (check_positivity(p)) out.push_back(p);
  }
  return out;
}

double lu(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
}
double un(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

const std::vector<euler::Problem>& euler_pool() {
  static const auto p = pool<euler::Problem>([](std::mt19937_64& r) {
    return euler::Problem{{lu(r, 1e-3, 1e3), un(r, -100, 100), lu(r, 1e-3, 1e3)},
                          {lu(r, 1e-3, 1e3), un(r, -100, 100), lu(r, 1e-3, 1e3)},
                          {}};
  });
  return p;
}

const std::vector<shallow::Problem>& swe_pool() {
  static const auto p = pool<shallow::Problem>([](std::mt19937_64& r) {
    return shallow::Problem{{lu(r, 1e-3, 1e2), un(r, -20, 20)},
                            {lu(r, 1e-3, 1e2), un(r, -20, 20)},
                            {}};
  });
  return p;
}

const std::vector<bloodflow::Problem>& bfe_pool() {
  static const auto p = pool<bloodflow::Problem>([](std::mt19937_64& r) {
    return bloodflow::Problem{{lu(r, 1e-2, 10), un(r, -300, 300)},
                              {lu(r, 1e-2, 10), un(r, -300, 300)},
                              {}};
  });
  return p;
}

template <class Pool, class Fn>
void run(benchmark::State& state, const Pool& problems, Fn fn) {
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fn(problems[i++ & 1023]));
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_EulerSolveExact(benchmark::State& s) {
  run(s, euler_pool(), [](const auto& p) { return euler::solve_exact(p); });
}
void BM_SweSolveExact(benchmark::State& s) {
  run(s, swe_pool(), [](const auto& p) { return shallow::solve_exact(p); });
}
void BM_BfeSolveExact(benchmark::State& s) {
  run(s, bfe_pool(), [](const auto& p) { return bloodflow::solve_exact(p); });
}

void BM_EulerEstimate(benchmark::State& s) {
  const auto id = static_cast<EstimatorId>(s.range(0));
  s.SetLabel(std::string(to_string(id)));
  run(s, euler_pool(), [id](const auto& p) { return euler::estimate(p, id); });
}
void BM_SweEstimate(benchmark::State& s) {
  const auto id = static_cast<EstimatorId>(s.range(0));
  s.SetLabel(std::string(to_string(id)));
  run(s, swe_pool(), [id](const auto& p) { return shallow::estimate(p, id); });
}
void BM_BfeEstimate(benchmark::State& s) {
  const auto id = static_cast<EstimatorId>(s.range(0));
  s.SetLabel(std::string(to_string(id)));
  run(s, bfe_pool(), [id](const auto& p) { return bloodflow::estimate(p, id); });
}

void estimator_args(benchmark::internal::Benchmark* b, System sys) {
  for (EstimatorId id : estimators_for(sys)) b->Arg(static_cast<int>(id));
}

void BM_FindRootCubic(benchmark::State& s) {
  std::size_t i = 0;
  for (auto _ : s) {
    const double r = 0.1 + 1e-3 * static_cast<double>(i++ & 1023);
    auto f = [r](double x) { return ValueSlope{(x - r) * (x * x + 1.0), 3 * x * x - 2 * r * x + 1}; };
    benchmark::DoNotOptimize(find_root(f, make_bracket(f, 0.0, 2.0)));
  }
}

}  // namespace

BENCHMARK(BM_EulerSolveExact);
BENCHMARK(BM_SweSolveExact);
BENCHMARK(BM_BfeSolveExact);
BENCHMARK(BM_EulerEstimate)->Apply([](benchmark::internal::Benchmark* b) { estimator_args(b, System::Euler); });
BENCHMARK(BM_SweEstimate)->Apply([](benchmark::internal::Benchmark* b) { estimator_args(b, System::Swe); });
BENCHMARK(BM_BfeEstimate)->Apply([](benchmark::internal::Benchmark* b) { estimator_args(b, System::Bfe); });
BENCHMARK(BM_FindRootCubic);

BENCHMARK_MAIN();
