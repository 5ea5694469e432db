#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "cli/fixtures.hpp"

namespace riemann_bounds::cli {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string pattern_from_label(std::string_view label) {
  if (label == "rar-rar") return "RR";
  if (label == "rar-shock") return "RS";
  if (label == "shock-rar") return "SR";
  if (label == "shock-shock") return "SS";
  return std::string(label);
}

void write_md_row(std::ostream& out, const std::vector<std::string>& cells) {
  out << '|';
  for (const auto& c : cells) out << ' ' << c << " |";
  out << '\n';
}

void write_md_table(std::ostream& out, const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
  write_md_row(out, header);
  out << '|';
  for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& r : rows) write_md_row(out, r);
}

}  // namespace

Table parse_table(std::string_view name) {
  const std::string key = lower(name);
  if (key == "ic") return Table::Ic;
  if (key == "s_left" || key == "sl") return Table::SLeft;
  if (key == "s_right" || key == "sr") return Table::SRight;
  throw UsageError("unknown table '" + std::string(name) + "'");
}

Format parse_format(std::string_view name) {
  const std::string key = lower(name);
  if (key == "text") return Format::Text;
  if (key == "md" || key == "markdown") return Format::Md;
  if (key == "csv") return Format::Csv;
  if (key == "json") return Format::Json;
  throw UsageError("unknown format '" + std::string(name) + "'");
}

std::string_view to_string(Table table) {
  switch (table) {
    case Table::Ic: return "ic";
    case Table::SLeft: return "s_left";
    case Table::SRight: return "s_right";
  }
  return "?";
}

std::vector<double> parse_state(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size() ||
        !std::isfinite(v)) {
      throw ParseError("cannot parse state '" + std::string(text) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

std::vector<EstimatorId> parse_estimators(System system,
                                          std::span<const std::string> names) {
  std::vector<EstimatorId> ids;
  auto add = [&ids](EstimatorId id) {
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  };
  for (const std::string& joined : names) {
    std::stringstream ss(joined);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (lower(name) == "all") {
        for (EstimatorId id : estimators_for(system)) add(id);
        continue;
      }
      const auto id = parse_estimator(name);
      if (!id) throw UsageError("unknown estimator '" + name + "'");
      if (!is_supported(system, *id)) {
        throw UsageError("estimator " + name + " is not defined for " +
                         std::string(riemann_bounds::to_string(system)));
      }
      add(*id);
    }
  }
  if (ids.empty()) throw UsageError("no estimators selected");
  return ids;
}

std::string fixed4(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

// ---------------------------------------------------------------------------

int cmd_exact(const AnyProblem& problem, Format format, std::ostream& out) {
  const StarState s = solve(problem);
  const std::string x = std::string(star_variable(problem.system));
  const std::string pattern(riemann_bounds::to_string(s.pattern));
  switch (format) {
    case Format::Text:
      out << x << "_*=" << fixed4(s.x_star) << " u_*=" << fixed4(s.u_star)
          << " pattern=" << pattern << " S_L=" << fixed4(s.s_left)
          << " S_R=" << fixed4(s.s_right) << '\n';
      break;
    case Format::Md:
      write_md_table(out, {x + "_*", "u_*", "pattern", "S_L", "S_R"},
                     {{fixed4(s.x_star), fixed4(s.u_star), pattern, fixed4(s.s_left),
                       fixed4(s.s_right)}});
      break;
    case Format::Csv:
      out << x << "_star,u_star,pattern,s_left,s_right\n"
          << fixed4(s.x_star) << ',' << fixed4(s.u_star) << ',' << pattern << ','
          << fixed4(s.s_left) << ',' << fixed4(s.s_right) << '\n';
      break;
    case Format::Json: {
      nlohmann::json j;
      j["system"] = riemann_bounds::to_string(problem.system);
      j["problem"] = problem_json(problem);
      j["star"] = {{x, s.x_star}, {"u", s.u_star}};
      j["results"] = nlohmann::json::array(
          {{{"estimator", "Exact"},
            {"s_left", s.s_left},
            {"s_right", s.s_right},
            {"pattern", pattern}}});
      out << j.dump(2) << '\n';
      break;
    }
  }
  return exit_code::kOk;
}

int cmd_bounds(const AnyProblem& problem, std::span<const EstimatorId> estimators,
               Format format, std::ostream& out) {
  const std::string pattern(riemann_bounds::to_string(classify(problem)));
  std::vector<SpeedBounds> rows;
  for (EstimatorId id : estimators) rows.push_back(estimate(problem, id));

  switch (format) {
    case Format::Text:
      for (const auto& b : rows) {
        out << riemann_bounds::to_string(b.estimator) << " S_L=" << fixed4(b.s_left)
            << " S_R=" << fixed4(b.s_right) << '\n';
      }
      break;
    case Format::Md: {
      std::vector<std::vector<std::string>> cells;
      for (const auto& b : rows) {
        cells.push_back({std::string(riemann_bounds::to_string(b.estimator)),
                         fixed4(b.s_left), fixed4(b.s_right), pattern});
      }
      write_md_table(out, {"estimator", "S_L", "S_R", "pattern"}, cells);
      break;
    }
    case Format::Csv:
      out << "estimator,s_left,s_right,pattern\n";
      for (const auto& b : rows) {
        out << riemann_bounds::to_string(b.estimator) << ',' << fixed4(b.s_left) << ','
            << fixed4(b.s_right) << ',' << pattern << '\n';
      }
      break;
    case Format::Json: {
      nlohmann::json j;
      j["system"] = riemann_bounds::to_string(problem.system);
      j["problem"] = problem_json(problem);
      j["results"] = nlohmann::json::array();
      for (const auto& b : rows) {
        j["results"].push_back({{"estimator", riemann_bounds::to_string(b.estimator)},
                                {"s_left", b.s_left},
                                {"s_right", b.s_right},
                                {"pattern", pattern}});
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
  return exit_code::kOk;
}

// ---------------------------------------------------------------------------

bool ReproducedCell::within_tolerance() const {
  if (skipped) return true;
  if (is_text()) return reference_text == computed_text;
  if (decimals >= 0) {
    const double scale = std::pow(10.0, decimals);
    const double rounded = std::round(computed * scale) / scale;
    return std::abs(rounded - reference) <= tolerance * (1.0 + 1e-9);
  }
  return std::abs(delta()) <= tolerance;
}

const ReproducedCell* ReproduceResult::find(int test, std::string_view column) const {
  for (const auto& c : cells) {
    if (c.test == test && c.column == column) return &c;
  }
  return nullptr;
}

bool ReproduceResult::all_within_tolerance() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const ReproducedCell& c) { return c.within_tolerance(); });
}

double speed_tolerance(double value) { return std::max(1e-3, 1e-6 * std::abs(value)); }

namespace {

// Inputs of test `n` from the system's IC fixture, preferring unrounded data.
AnyProblem fixture_problem(System system, const nlohmann::json& ic, int test) {
  for (const auto& row : ic["rows"]) {
    if (row["test"].get<int>() != test) continue;
    const auto& src = row.contains("inputs") ? row["inputs"] : row;
    const auto l = src["left"].get<std::vector<double>>();
    const auto r = src["right"].get<std::vector<double>>();
    ParamOverrides o;
    const auto& params = ic["params"];
    if (params.contains("gamma")) o.gamma = params["gamma"].get<double>();
    if (params.contains("g")) o.gravity = params["g"].get<double>();
    if (params.contains("beta")) o.beta = params["beta"].get<double>();
    if (params.contains("rho")) o.rho_blood = params["rho"].get<double>();
    return make_problem(system, l, r, o);
  }
  throw Error("fixture has no test " + std::to_string(test));
}

void reproduce_ic(const nlohmann::json& ic, ReproduceResult& res) {
  const std::string x = ic["star_variable"].get<std::string>() + "_star";
  res.columns = {x, "u_star", "pattern"};
  for (const auto& row : ic["rows"]) {
    const int test = row["test"].get<int>();
    res.tests.push_back(test);
    const std::string skip = row.value("skip", std::string());
    StarState s;
    if (skip.empty()) s = solve(fixture_problem(res.system, ic, test));

    auto numeric = [&](const std::string& column, const char* key, double computed) {
      ReproducedCell c;
      c.test = test;
      c.column = column;
      c.reference = row[key].get<double>();
      c.computed = computed;
      int decimals = 4;
      if (row.contains("decimals") && row["decimals"].contains(key)) {
        decimals = row["decimals"][key].get<int>();
      }
      c.decimals = decimals;
      c.tolerance = std::pow(10.0, -decimals);
      c.skipped = !skip.empty();
      c.note = skip;
      res.cells.push_back(c);
    };
    numeric(x, "x_star", s.x_star);
    numeric("u_star", "u_star", s.u_star);

    ReproducedCell p;
    p.test = test;
    p.column = "pattern";
    p.reference_text = pattern_from_label(row["pattern"].get<std::string>());
    p.computed_text = skip.empty() ? std::string(riemann_bounds::to_string(s.pattern)) : "";
    p.skipped = !skip.empty();
    p.note = skip;
    res.cells.push_back(p);
  }
}

void reproduce_speeds(const nlohmann::json& table, const nlohmann::json& ic,
                      ReproduceResult& res) {
  const bool left = res.table == Table::SLeft;
  res.columns = table["columns"].get<std::vector<std::string>>();
  for (const auto& row : table["rows"]) {
    const int test = row["test"].get<int>();
    res.tests.push_back(test);
    const auto values = row["values"].get<std::vector<double>>();
    const auto flagged = row.value("flagged", std::vector<std::string>{});
    const AnyProblem problem = fixture_problem(res.system, ic, test);
    const StarState exact = solve(problem);
    const double exact_speed = left ? exact.s_left : exact.s_right;
    const double tol = kBoundRelTol * characteristic_speed(problem);

    for (std::size_t i = 0; i < res.columns.size(); ++i) {
      ReproducedCell c;
      c.test = test;
      c.column = res.columns[i];
      c.reference = values.at(i);
      c.tolerance = speed_tolerance(c.reference);
      c.reference_flagged =
          std::find(flagged.begin(), flagged.end(), c.column) != flagged.end();
      const auto id = parse_estimator(c.column);
      if (!id) {
        c.skipped = true;
        c.note = "no implementation of the " + c.column + " estimator";
      } else {
        const SpeedBounds b = estimate(problem, *id);
        c.computed = left ? b.s_left : b.s_right;
        c.violation = left ? c.computed > exact_speed + tol
                           : c.computed < exact_speed - tol;
      }
      res.cells.push_back(c);
    }
  }
}

std::string cell_text(const ReproducedCell& c) {
  if (c.skipped) return "skipped";
  if (c.is_text()) {
    return c.within_tolerance() ? c.computed_text
                                : c.computed_text + " (expected " + c.reference_text + ")";
  }
  std::string s = fixed4(c.computed);
  if (c.reference_flagged) s = "**" + s + "**";
  if (!c.within_tolerance()) s += " (expected " + fixed4(c.reference) + ")";
  return s;
}

}  // namespace

ReproduceResult reproduce_table(System system, Table table) {
  ReproduceResult res;
  res.system = system;
  res.table = table;
  const nlohmann::json ic = load_fixture(system, Table::Ic);
  if (table == Table::Ic) {
    res.caption = ic["caption"].get<std::string>();
    reproduce_ic(ic, res);
  } else {
    const nlohmann::json t = load_fixture(system, table);
    res.caption = t["caption"].get<std::string>();
    reproduce_speeds(t, ic, res);
  }
  return res;
}

int cmd_reproduce(const TableSpec& spec, std::ostream& out) {
  const ReproduceResult res = reproduce_table(spec.system, spec.table);

  double max_delta = 0.0;
  const ReproducedCell* worst = nullptr;
  int compared = 0, skipped = 0, over = 0, flagged = 0, flagged_violations = 0;
  int unflagged_violations = 0;
  for (const auto& c : res.cells) {
    if (c.skipped) {
      ++skipped;
      continue;
    }
    ++compared;
    if (!c.within_tolerance()) ++over;
    if (c.reference_flagged) {
      ++flagged;
      if (c.violation) ++flagged_violations;
    } else if (c.violation) {
      ++unflagged_violations;
    }
    if (!c.is_text() && std::abs(c.delta()) >= max_delta) {
      max_delta = std::abs(c.delta());
      worst = &c;
    }
  }
  const int code = over == 0 ? exit_code::kOk : exit_code::kCheckFailed;

  if (spec.format == Format::Json) {
    nlohmann::json j;
    j["system"] = riemann_bounds::to_string(res.system);
    j["table"] = to_string(res.table);
    j["caption"] = res.caption;
    j["cells"] = nlohmann::json::array();
    for (const auto& c : res.cells) {
      nlohmann::json cell{{"test", c.test}, {"column", c.column}, {"skipped", c.skipped}};
      if (c.skipped) {
        cell["reason"] = c.note;
      } else if (c.is_text()) {
        cell["reference"] = c.reference_text;
        cell["computed"] = c.computed_text;
      } else {
        cell["reference"] = c.reference;
        cell["computed"] = c.computed;
        cell["delta"] = c.delta();
        cell["tolerance"] = c.tolerance;
      }
      if (res.table != Table::Ic && !c.skipped) {
        cell["reference_flagged"] = c.reference_flagged;
        cell["violation"] = c.violation;
      }
      cell["within_tolerance"] = c.within_tolerance();
      j["cells"].push_back(cell);
    }
    j["summary"] = {{"compared", compared},
                    {"skipped", skipped},
                    {"over_tolerance", over},
                    {"max_abs_delta", max_delta}};
    out << j.dump(2) << '\n';
    return code;
  }

  if (spec.format == Format::Csv) {
    out << "test,column,computed,reference,delta,tolerance,status,reference_flagged,violation\n";
    for (const auto& c : res.cells) {
      out << c.test << ',' << c.column << ',';
      if (c.skipped) {
        out << ",,,,skipped,,\n";
        continue;
      }
      if (c.is_text()) {
        out << c.computed_text << ',' << c.reference_text << ",,,";
      } else {
        out << fixed4(c.computed) << ',' << fixed4(c.reference) << ',' << fixed4(c.delta())
            << ',' << c.tolerance << ',';
      }
      out << (c.within_tolerance() ? "ok" : "over") << ','
          << (c.reference_flagged ? "yes" : "no") << ',' << (c.violation ? "yes" : "no")
          << '\n';
    }
    return code;
  }

  // Markdown grid plus a summary; plain text shares it.
  out << "## " << riemann_bounds::to_string(res.system) << ' ' << to_string(res.table)
      << ": " << res.caption << "\n\n";
  std::vector<std::string> header{"test"};
  header.insert(header.end(), res.columns.begin(), res.columns.end());
  std::vector<std::vector<std::string>> rows;
  for (int test : res.tests) {
    std::vector<std::string> r{std::to_string(test)};
    for (const auto& col : res.columns) r.push_back(cell_text(*res.find(test, col)));
    rows.push_back(r);
  }
  write_md_table(out, header, rows);
  out << '\n';
  if (res.table != Table::Ic) {
    out << "Bold cells are flagged in the reference table as failing to bound the exact speed.\n";
  }
  out << "compared " << compared << " cells, " << over << " over tolerance, " << skipped
      << " skipped\n";
  if (worst) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", max_delta);
    out << "max |delta| = " << buf << " (test " << worst->test << ", " << worst->column
        << ")\n";
  }
  for (const auto& c : res.cells) {
    if (!c.within_tolerance()) {
      out << "over tolerance: test " << c.test << ' ' << c.column << " computed "
          << (c.is_text() ? c.computed_text : fixed4(c.computed)) << " expected "
          << (c.is_text() ? c.reference_text : fixed4(c.reference)) << '\n';
    }
  }
  for (const auto& c : res.cells) {
    if (c.skipped && c.column == res.columns.front()) {
      out << "skipped: test " << c.test << ": " << c.note << '\n';
    }
  }
  if (res.table != Table::Ic) {
    for (const auto& col : res.columns) {
      const auto* c = res.find(res.tests.front(), col);
      if (c && c->skipped) out << "skipped column " << col << ": " << c->note << '\n';
    }
    out << "reference-flagged cells: " << flagged << ", classified as violations: "
        << flagged_violations << "; unflagged violations: " << unflagged_violations
        << '\n';
  }
  return code;
}

}  // namespace riemann_bounds::cli
