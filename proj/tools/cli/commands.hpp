#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cli/dispatch.hpp"
#include "riemann_bounds/errors.hpp"

namespace riemann_bounds::cli {

class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kPhysicalData = 2;
inline constexpr int kCheckFailed = 3;
}  // namespace exit_code

enum class Table { Ic, SLeft, SRight };
enum class Format { Text, Md, Csv, Json };

struct TableSpec {
  System system = System::Euler;
  Table table = Table::SRight;
  Format format = Format::Md;
};

Table parse_table(std::string_view name);
Format parse_format(std::string_view name);
std::string_view to_string(Table table);

/// "1,0,0.1" -> {1, 0, 0.1}. Throws ParseError.
std::vector<double> parse_state(std::string_view text);

/// Names or "all", comma separated; "all" expands to every estimator of the
/// system. Throws UsageError on unknown or unsupported names.
std::vector<EstimatorId> parse_estimators(System system,
                                          std::span<const std::string> names);

/// Fixed four decimals, never "-0.0000".
std::string fixed4(double value);

int cmd_exact(const AnyProblem& problem, Format format, std::ostream& out);
int cmd_bounds(const AnyProblem& problem, std::span<const EstimatorId> estimators,
               Format format, std::ostream& out);

// ---------------------------------------------------------------------------
// Table reproduction

struct ReproducedCell {
  int test = 0;
  std::string column;
  double reference = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  /// IC cells: printed decimals. The computed value is rounded to this many
  /// decimals before the comparison, so `tolerance` is one printed unit.
  int decimals = -1;
  bool skipped = false;
  std::string note;  // skip reason
  // Speed tables only.
  bool reference_flagged = false;
  bool violation = false;
  // IC pattern cells compare text.
  std::string reference_text;
  std::string computed_text;

  bool is_text() const { return !reference_text.empty(); }
  double delta() const { return computed - reference; }
  bool within_tolerance() const;
};

struct ReproduceResult {
  System system = System::Euler;
  Table table = Table::SRight;
  std::string caption;
  std::vector<std::string> columns;
  std::vector<int> tests;
  std::vector<ReproducedCell> cells;  // row-major

  const ReproducedCell* find(int test, std::string_view column) const;
  bool all_within_tolerance() const;
};

/// Speed-table tolerance max(1e-3, 1e-6 |value|).
double speed_tolerance(double value);

/// Recomputes every cell of an embedded fixture.
ReproduceResult reproduce_table(System system, Table table);

int cmd_reproduce(const TableSpec& spec, std::ostream& out);

// ---------------------------------------------------------------------------
// Randomised bound checks

struct Violation {
  std::uint64_t trial = 0;
  nlohmann::json problem;
  std::string estimator;  // "TwoRarefaction" for the star-value check
  std::string side;       // "left", "right" or "star"
  double estimate = 0.0;
  double exact = 0.0;
};

struct FuzzReport {
  System system = System::Euler;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t redraws = 0;  // vacuum / dry / collapse draws replaced
  std::vector<Violation> violations;  // sorted by trial
};

/// Relative tolerance of the bound checks, scaled by characteristic_speed.
inline constexpr double kBoundRelTol = 1e-9;

/// Draws problem `trial` of the system's random ensemble. Depends only on
/// (seed, trial); non-physical draws are replaced, counting them in *redraws.
AnyProblem draw_problem(System system, std::uint64_t seed, std::uint64_t trial,
                        std::uint64_t* redraws = nullptr);

/// Throws UsageError when count == 0. threads == 0 picks the hardware count.
FuzzReport run_fuzz(System system, std::uint64_t count, std::uint64_t seed,
                    unsigned threads = 1);

int cmd_fuzz(System system, std::uint64_t count, std::uint64_t seed,
             unsigned threads, Format format, std::ostream& out);

}  // namespace riemann_bounds::cli
