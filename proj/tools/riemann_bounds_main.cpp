#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace rb = riemann_bounds;
namespace cli = riemann_bounds::cli;

namespace {

struct Options {
  std::string system = "euler";
  std::string left, right;
  std::optional<double> gamma, gravity, beta, rho_blood;
  std::vector<std::string> estimators;
  std::string table = "s_right";
  std::string format;
  std::uint64_t count = 1000;
  std::uint64_t seed = 42;
  unsigned threads = 1;
};

rb::System system_of(const Options& o) {
  const auto s = rb::parse_system(o.system);
  if (!s) throw cli::UsageError("unknown system '" + o.system + "'");
  return *s;
}

cli::AnyProblem problem_of(const Options& o) {
  if (o.left.empty() || o.right.empty()) {
    throw cli::UsageError("--left and --right are required");
  }
  return cli::make_problem(system_of(o), cli::parse_state(o.left),
                           cli::parse_state(o.right),
                           {o.gamma, o.gravity, o.beta, o.rho_blood});
}

cli::Format format_of(const Options& o, cli::Format fallback) {
  return o.format.empty() ? fallback : cli::parse_format(o.format);
}

void add_problem_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--system", o.system, "euler, swe or bfe")->capture_default_str();
  cmd->add_option("--left", o.left, "left state: rho,u,p (euler), h,u (swe), A,u (bfe)");
  cmd->add_option("--right", o.right, "right state, same layout as --left");
  cmd->add_option("--gamma", o.gamma, "ratio of specific heats (euler, default 1.4)");
  cmd->add_option("--gravity", o.gravity, "gravitational acceleration (swe, default 9.8)");
  cmd->add_option("--beta", o.beta, "wall stiffness (bfe, default 28209.4792)");
  cmd->add_option("--rho-blood", o.rho_blood, "blood density (bfe, default 1.05)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Riemann solutions and wave-speed bounds for the Euler, "
               "shallow-water and blood-flow equations",
               "riemann-bounds"};
  app.require_subcommand(1);
  Options o;

  auto* exact = app.add_subcommand("exact", "solve one Riemann problem exactly");
  add_problem_options(exact, o);
  exact->add_option("--format", o.format, "text (default), md, csv or json");

  auto* bounds = app.add_subcommand("bounds", "evaluate wave-speed estimators");
  add_problem_options(bounds, o);
  bounds->add_option("--estimator", o.estimators,
                     "estimator name, comma list or 'all' (default all)");
  bounds->add_option("--format", o.format, "md (default), text, csv or json");

  auto* reproduce = app.add_subcommand("reproduce", "recompute a reference table and diff it");
  reproduce->add_option("--system", o.system, "euler, swe or bfe")->capture_default_str();
  reproduce->add_option("--table", o.table, "ic, s_left or s_right")->capture_default_str();
  reproduce->add_option("--format", o.format, "md (default), csv or json");

  auto* fuzz = app.add_subcommand("fuzz", "check the speed bounds on random data");
  fuzz->add_option("--system", o.system, "euler, swe or bfe")->capture_default_str();
  fuzz->add_option("--count", o.count, "number of random problems")->capture_default_str();
  fuzz->add_option("--seed", o.seed, "random seed")->capture_default_str();
  fuzz->add_option("--threads", o.threads, "worker threads, 0 = all cores")
      ->capture_default_str();
  fuzz->add_option("--format", o.format, "text (default), csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::exit_code::kUsage;
  }

  try {
    if (exact->parsed()) {
      return cli::cmd_exact(problem_of(o), format_of(o, cli::Format::Text), std::cout);
    }
    if (bounds->parsed()) {
      const auto problem = problem_of(o);
      std::vector<std::string> names = o.estimators;
      if (names.empty()) names.push_back("all");
      const auto ids = cli::parse_estimators(problem.system, names);
      return cli::cmd_bounds(problem, ids, format_of(o, cli::Format::Md), std::cout);
    }
    if (reproduce->parsed()) {
      return cli::cmd_reproduce(
          {system_of(o), cli::parse_table(o.table), format_of(o, cli::Format::Md)},
          std::cout);
    }
    if (fuzz->parsed()) {
      return cli::cmd_fuzz(system_of(o), o.count, o.seed, o.threads,
                           format_of(o, cli::Format::Text), std::cout);
    }
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code::kUsage;
  } catch (const rb::PhysicalDataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code::kPhysicalData;
  } catch (const rb::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code::kUsage;
  } catch (const rb::UnsupportedEstimator& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code::kUsage;
  }
  return cli::exit_code::kUsage;
}
