#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace riemann_bounds {

/// Outer wave structure of a Riemann solution, left wave first.
enum class WavePattern { RR, RS, SR, SS, Vacuum };

enum class EstimatorId {
  DavisA,
  DavisB,
  Einfeldt,
  Batten,
  Toro,
  TmsA,
  TmsB,
  TmsC,
  TmsD,
  Exact,
};

enum class System { Euler, Swe, Bfe };

struct SpeedBounds {
  double s_left = 0.0;
  double s_right = 0.0;
  EstimatorId estimator = EstimatorId::Exact;
  std::optional<WavePattern> pattern;
};

std::string_view to_string(WavePattern pattern);
std::string_view to_string(EstimatorId id);
std::string_view to_string(System system);

/// Case-insensitive; accepts the canonical names ("TmsA") and the short
/// snake forms ("tms_a", "davis_b").
std::optional<EstimatorId> parse_estimator(std::string_view name);
std::optional<System> parse_system(std::string_view name);

/// Estimators defined for `system`, in table order, Exact last.
std::span<const EstimatorId> estimators_for(System system);
bool is_supported(System system, EstimatorId id);

/// Estimators that the theory guarantees to bound the extreme speeds.
std::span<const EstimatorId> bounding_estimators(System system);

}  // namespace riemann_bounds
