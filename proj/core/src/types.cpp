#include "riemann_bounds/types.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace riemann_bounds {
namespace {

constexpr std::array kEulerEstimators = {
    EstimatorId::DavisA, EstimatorId::DavisB, EstimatorId::Toro,
    EstimatorId::Batten, EstimatorId::Einfeldt, EstimatorId::TmsA,
    EstimatorId::TmsB,   EstimatorId::TmsC,     EstimatorId::Exact};
constexpr std::array kTwoWaveEstimators = {
    EstimatorId::DavisA, EstimatorId::DavisB, EstimatorId::Toro,
    EstimatorId::TmsA,   EstimatorId::TmsB,   EstimatorId::TmsC,
    EstimatorId::TmsD,   EstimatorId::Exact};

constexpr std::array kEulerBounding = {EstimatorId::Toro, EstimatorId::TmsA,
                                       EstimatorId::TmsB, EstimatorId::TmsC};
constexpr std::array kTwoWaveBounding = {EstimatorId::Toro, EstimatorId::TmsA,
                                         EstimatorId::TmsB, EstimatorId::TmsC,
                                         EstimatorId::TmsD};

std::string normalize(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch == '_' || ch == '-') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return out;
}

}  // namespace

std::string_view to_string(WavePattern pattern) {
  switch (pattern) {
    case WavePattern::RR: return "RR";
    case WavePattern::RS: return "RS";
    case WavePattern::SR: return "SR";
    case WavePattern::SS: return "SS";
    case WavePattern::Vacuum: return "Vacuum";
  }
  return "?";
}

std::string_view to_string(EstimatorId id) {
  switch (id) {
    case EstimatorId::DavisA: return "DavisA";
    case EstimatorId::DavisB: return "DavisB";
    case EstimatorId::Einfeldt: return "Einfeldt";
    case EstimatorId::Batten: return "Batten";
    case EstimatorId::Toro: return "Toro";
    case EstimatorId::TmsA: return "TmsA";
    case EstimatorId::TmsB: return "TmsB";
    case EstimatorId::TmsC: return "TmsC";
    case EstimatorId::TmsD: return "TmsD";
    case EstimatorId::Exact: return "Exact";
  }
  return "?";
}

std::string_view to_string(System system) {
  switch (system) {
    case System::Euler: return "euler";
    case System::Swe: return "swe";
    case System::Bfe: return "bfe";
  }
  return "?";
}

std::optional<EstimatorId> parse_estimator(std::string_view name) {
  const std::string key = normalize(name);
  constexpr std::array all = {
      EstimatorId::DavisA, EstimatorId::DavisB, EstimatorId::Einfeldt,
      EstimatorId::Batten, EstimatorId::Toro,   EstimatorId::TmsA,
      EstimatorId::TmsB,   EstimatorId::TmsC,   EstimatorId::TmsD,
      EstimatorId::Exact};
  for (EstimatorId id : all) {
    if (normalize(to_string(id)) == key) return id;
  }
  return std::nullopt;
}

std::optional<System> parse_system(std::string_view name) {
  const std::string key = normalize(name);
  if (key == "euler") return System::Euler;
  if (key == "swe" || key == "shallow") return System::Swe;
  if (key == "bfe" || key == "bloodflow") return System::Bfe;
  return std::nullopt;
}

std::span<const EstimatorId> estimators_for(System system) {
  if (system == System::Euler) return kEulerEstimators;
  return kTwoWaveEstimators;
}

bool is_supported(System system, EstimatorId id) {
  const auto ids = estimators_for(system);
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::span<const EstimatorId> bounding_estimators(System system) {
  if (system == System::Euler) return kEulerBounding;
  return kTwoWaveBounding;
}

}  // namespace riemann_bounds
