#include "cli/fixtures.hpp"

#include <string>

#include "fixtures_data.hpp"

namespace riemann_bounds::cli {

std::string_view fixture_text(std::string_view name) {
  for (const auto& f : embedded_fixtures()) {
    if (f.name == name) return f.text;
  }
  throw Error("no embedded fixture named " + std::string(name));
}

nlohmann::json load_fixture(System system, Table table) {
  const std::string name =
      std::string(riemann_bounds::to_string(system)) + "_" + std::string(to_string(table));
  return nlohmann::json::parse(fixture_text(name));
}

}  // namespace riemann_bounds::cli
