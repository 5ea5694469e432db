#pragma once

#include <string_view>

#include <json.hpp>

#include "cli/commands.hpp"

namespace riemann_bounds::cli {

/// Raw text of an embedded fixture such as "euler_s_right".
std::string_view fixture_text(std::string_view name);

nlohmann::json load_fixture(System system, Table table);

}  // namespace riemann_bounds::cli
