#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <thread>

#include "cli/commands.hpp"

namespace riemann_bounds::cli {
namespace {

// Ensemble ranges of the bound-property suite.
struct Ensemble {
  double x_lo, x_hi;  // log-uniform density/pressure, depth or area
  double u_max;       // velocity uniform in [-u_max, u_max]
};

constexpr Ensemble kEuler{1e-3, 1e3, 100.0};
constexpr Ensemble kSwe{1e-3, 1e2, 20.0};
constexpr Ensemble kBfe{1e-2, 10.0, 300.0};

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::vector<double> draw_state(System system, std::mt19937_64& rng) {
  const Ensemble& e = system == System::Euler ? kEuler : system == System::Swe ? kSwe : kBfe;
  std::uniform_real_distribution<double> log_x(std::log(e.x_lo), std::log(e.x_hi));
  std::uniform_real_distribution<double> vel(-e.u_max, e.u_max);
  if (system == System::Euler) {
    const double rho = std::exp(log_x(rng));
    const double u = vel(rng);
    const double p = std::exp(log_x(rng));
    return {rho, u, p};
  }
  const double x = std::exp(log_x(rng));
  return {x, vel(rng)};
}

bool physical(const AnyProblem& p) { return classify(p) != WavePattern::Vacuum; }

void check_trial(System system, std::uint64_t seed, std::uint64_t trial,
                 std::uint64_t& redraws, std::vector<Violation>& out) {
  const AnyProblem problem = draw_problem(system, seed, trial, &redraws);
  const StarState exact = solve(problem);
  const double tol = kBoundRelTol * characteristic_speed(problem);

  for (EstimatorId id : bounding_estimators(system)) {
    const SpeedBounds b = estimate(problem, id);
    if (b.s_left > exact.s_left + tol) {
      out.push_back({trial, problem_json(problem), std::string(to_string(id)), "left",
                     b.s_left, exact.s_left});
    }
    if (b.s_right < exact.s_right - tol) {
      out.push_back({trial, problem_json(problem), std::string(to_string(id)), "right",
                     b.s_right, exact.s_right});
    }
  }
  const double x_rr = two_rarefaction(problem);
  if (x_rr < exact.x_star * (1.0 - kBoundRelTol)) {
    out.push_back({trial, problem_json(problem), "TwoRarefaction", "star", x_rr,
                   exact.x_star});
  }
}

}  // namespace

AnyProblem draw_problem(System system, std::uint64_t seed, std::uint64_t trial,
                        std::uint64_t* redraws) {
  std::mt19937_64 rng = trial_engine(seed, trial);
  while (true) {
    const auto l = draw_state(system, rng);
    const auto r = draw_state(system, rng);
    AnyProblem p = make_problem(system, l, r);
    if (physical(p)) return p;
    if (redraws) ++*redraws;
  }
}

FuzzReport run_fuzz(System system, std::uint64_t count, std::uint64_t seed,
                    unsigned threads) {
  if (count == 0) throw UsageError("fuzz needs --count > 0");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));

  std::vector<std::vector<Violation>> found(threads);
  std::vector<std::uint64_t> redraws(threads, 0);
  auto work = [&](unsigned w) {
    for (std::uint64_t t = w; t < count; t += threads) {
      check_trial(system, seed, t, redraws[w], found[w]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  FuzzReport report;
  report.system = system;
  report.trials = count;
  report.seed = seed;
  for (unsigned w = 0; w < threads; ++w) {
    report.redraws += redraws[w];
    report.violations.insert(report.violations.end(), found[w].begin(), found[w].end());
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     if (a.trial != b.trial) return a.trial < b.trial;
                     if (a.estimator != b.estimator) return a.estimator < b.estimator;
                     return a.side < b.side;
                   });
  return report;
}

int cmd_fuzz(System system, std::uint64_t count, std::uint64_t seed, unsigned threads,
             Format format, std::ostream& out) {
  const FuzzReport r = run_fuzz(system, count, seed, threads);
  if (format == Format::Json) {
    nlohmann::json j{{"system", to_string(system)},
                     {"trials", r.trials},
                     {"seed", r.seed},
                     {"redraws", r.redraws},
                     {"violations", nlohmann::json::array()}};
    for (const auto& v : r.violations) {
      j["violations"].push_back({{"trial", v.trial},
                                 {"problem", v.problem},
                                 {"estimator", v.estimator},
                                 {"side", v.side},
                                 {"estimate", v.estimate},
                                 {"exact", v.exact}});
    }
    out << j.dump(2) << '\n';
  } else if (format == Format::Csv) {
    out << "trial,estimator,side,estimate,exact,problem\n";
    for (const auto& v : r.violations) {
      out << v.trial << ',' << v.estimator << ',' << v.side << ',' << v.estimate << ','
          << v.exact << ",\"" << v.problem.dump() << "\"\n";
    }
  } else {
    out << "system=" << to_string(system) << " trials=" << r.trials << " seed=" << r.seed
        << " redraws=" << r.redraws << " violations=" << r.violations.size() << '\n';
    for (const auto& v : r.violations) {
      out << "trial " << v.trial << ' ' << v.estimator << ' ' << v.side
          << " estimate=" << v.estimate << " exact=" << v.exact << ' ' << v.problem.dump()
          << '\n';
    }
  }
  return r.violations.empty() ? exit_code::kOk : exit_code::kCheckFailed;
}

}  // namespace riemann_bounds::cli
