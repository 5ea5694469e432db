#include <algorithm>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include <json.hpp>

#include "cli/commands.hpp"
#include "cli/dispatch.hpp"
#include "cli/fixtures.hpp"

namespace riemann_bounds::cli {
namespace {

using ::testing::HasSubstr;
using nlohmann::json;

AnyProblem problem(System system, const std::string& left, const std::string& right) {
  return make_problem(system, parse_state(left), parse_state(right));
}

std::string run_exact(System system, const std::string& l, const std::string& r,
                      Format format = Format::Text) {
  std::ostringstream out;
  EXPECT_EQ(cmd_exact(problem(system, l, r), format, out), exit_code::kOk);
  return out.str();
}

json bounds_json(System system, const std::string& l, const std::string& r,
                 const std::vector<std::string>& names) {
  std::ostringstream out;
  const auto ids = parse_estimators(system, names);
  EXPECT_EQ(cmd_bounds(problem(system, l, r), ids, Format::Json, out), exit_code::kOk);
  return json::parse(out.str());
}

TEST(ParseState, Values) {
  EXPECT_THAT(parse_state("1,0,0.1"), ::testing::ElementsAre(1.0, 0.0, 0.1));
  EXPECT_THAT(parse_state("-5, 2.5e-3"), ::testing::ElementsAre(-5.0, 2.5e-3));
  EXPECT_THROW(parse_state(""), ParseError);
  EXPECT_THROW(parse_state("1,,2"), ParseError);
  EXPECT_THROW(parse_state("1,x"), ParseError);
  EXPECT_THROW(parse_state("1,2junk"), ParseError);
}

TEST(MakeProblem, ComponentCount) {
  const std::vector<double> two{1.0, 0.0}, three{1.0, 0.0, 1.0};
  EXPECT_THROW(make_problem(System::Euler, two, three), ParseError);
  EXPECT_THROW(make_problem(System::Swe, three, two), ParseError);
  EXPECT_NO_THROW(make_problem(System::Bfe, two, two));
}

TEST(ParseEstimators, NamesAndAll) {
  const std::vector<std::string> all{"all"};
  EXPECT_EQ(parse_estimators(System::Euler, all).size(), 9u);
  EXPECT_EQ(parse_estimators(System::Swe, all).size(), 8u);
  const std::vector<std::string> two{"tms_b,Toro"};
  EXPECT_THAT(parse_estimators(System::Euler, two),
              ::testing::ElementsAre(EstimatorId::TmsB, EstimatorId::Toro));
  const std::vector<std::string> gp{"GP"};
  EXPECT_THROW(parse_estimators(System::Euler, gp), UsageError);
  const std::vector<std::string> tmsd{"TmsD"};
  EXPECT_THROW(parse_estimators(System::Euler, tmsd), UsageError);
  EXPECT_THROW(parse_estimators(System::Euler, {}), UsageError);
}

TEST(ParseEnums, Names) {
  EXPECT_EQ(parse_table("s_left"), Table::SLeft);
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_THROW(parse_table("s_middle"), UsageError);
  EXPECT_THROW(parse_format("xml"), UsageError);
}

TEST(Fixed4, Formatting) {
  EXPECT_EQ(fixed4(0.52191), "0.5219");
  EXPECT_EQ(fixed4(-1.18321), "-1.1832");
  EXPECT_EQ(fixed4(-0.00001), "0.0000");
  EXPECT_EQ(fixed4(-0.0), "0.0000");
  EXPECT_EQ(fixed4(716.24348), "716.2435");
}

TEST(CmdExact, Examples) {
  EXPECT_THAT(run_exact(System::Euler, "1,0,1", "1,0,0.1"),
              HasSubstr("p_*=0.5219 u_*=0.5248 pattern=RS"));
  EXPECT_THAT(run_exact(System::Swe, "1,-5", "1,5"), HasSubstr("h_*=0.0406 u_*=0.0000"));
  EXPECT_THAT(run_exact(System::Euler, "1,0,1", "1,0,1"), HasSubstr("p_*=1.0000 u_*=0.0000"));
}

TEST(CmdExact, PhysicalDataErrorsPropagate) {
  std::ostringstream out;
  EXPECT_THROW(cmd_exact(problem(System::Euler, "1,-10,0.4", "1,10,0.4"), Format::Text, out),
               VacuumData);
  EXPECT_THROW(cmd_exact(problem(System::Swe, "1,-10", "1,10"), Format::Text, out), DryBed);
  EXPECT_THROW(cmd_exact(problem(System::Bfe, "1,-700", "1,700"), Format::Text, out),
               CollapseData);
}

TEST(CmdBounds, EulerTest1AllEstimators) {
  const json j = bounds_json(System::Euler, "1,0,1", "1,0,0.1", {"all"});
  ASSERT_EQ(j.at("results").size(), 9u);
  const auto row = std::find_if(j["results"].begin(), j["results"].end(),
                                [](const json& r) { return r["estimator"] == "TmsB"; });
  ASSERT_NE(row, j["results"].end());
  EXPECT_EQ(fixed4((*row)["s_left"].get<double>()), "-1.1832");
  EXPECT_EQ(fixed4((*row)["s_right"].get<double>()), "0.8080");
}

TEST(CmdBounds, BfeTest6TmsD) {
  const std::string l = std::to_string(std::numbers::pi) + ",-10";
  const std::string r = std::to_string(std::numbers::pi) + ",20";
  const json j = bounds_json(System::Bfe, l, r, {"TmsD"});
  EXPECT_EQ(fixed4(j["results"][0]["s_left"].get<double>()), "-596.7498");
  EXPECT_EQ(fixed4(j["results"][0]["s_right"].get<double>()), "606.7498");
}

TEST(CmdBounds, IdenticalStatesGiveEigenvalues) {
  const json j = bounds_json(System::Euler, "1,0.5,1", "1,0.5,1", {"all"});
  const double c = std::sqrt(1.4);
  for (const json& r : j["results"]) {
    EXPECT_NEAR(r["s_left"].get<double>(), 0.5 - c, 1e-12) << r["estimator"];
    EXPECT_NEAR(r["s_right"].get<double>(), 0.5 + c, 1e-12) << r["estimator"];
  }
}

TEST(CmdBounds, FormatsCarryTheSameNumbers) {
  const AnyProblem p = problem(System::Swe, "1,3", "0.5,0");
  const auto ids = parse_estimators(System::Swe, std::vector<std::string>{"all"});
  std::ostringstream md, csv, js;
  cmd_bounds(p, ids, Format::Md, md);
  cmd_bounds(p, ids, Format::Csv, csv);
  cmd_bounds(p, ids, Format::Json, js);
  const json j = json::parse(js.str());
  for (const json& r : j["results"]) {
    const std::string sl = fixed4(r["s_left"].get<double>());
    const std::string sr = fixed4(r["s_right"].get<double>());
    const std::string name = r["estimator"];
    EXPECT_THAT(md.str(), HasSubstr("| " + name + " | " + sl + " | " + sr + " |"));
    EXPECT_THAT(csv.str(), HasSubstr(name + "," + sl + "," + sr));
  }
}

TEST(CmdBounds, JsonKeepsFullPrecision) {
  const json j = bounds_json(System::Euler, "1,0,1", "1,0,0.1", {"Exact"});
  const double s = j["results"][0]["s_left"].get<double>();
  const auto star = solve(problem(System::Euler, "1,0,1", "1,0,0.1"));
  EXPECT_EQ(s, star.s_left);
  EXPECT_EQ(j["system"], "euler");
  EXPECT_EQ(j["problem"]["params"]["gamma"], 1.4);
}

TEST(CmdBounds, OutputIsDeterministic) {
  const AnyProblem p = problem(System::Euler, "6,8,460", "6,-6,46");
  const auto ids = parse_estimators(System::Euler, std::vector<std::string>{"all"});
  for (Format f : {Format::Md, Format::Csv, Format::Json, Format::Text}) {
    std::ostringstream a, b;
    cmd_bounds(p, ids, f, a);
    cmd_bounds(p, ids, f, b);
    EXPECT_EQ(a.str(), b.str());
  }
}

TEST(ParamOverrides, Applied) {
  ParamOverrides o;
  o.gamma = 5.0 / 3.0;
  const std::vector<double> l{1.0, 0.0, 1.0}, r{1.0, 0.0, 1.0};
  const StarState s = solve(make_problem(System::Euler, l, r, o));
  EXPECT_NEAR(s.s_right, std::sqrt(5.0 / 3.0), 1e-14);
}

TEST(Fixtures, AllTablesEmbedded) {
  for (System s : {System::Euler, System::Swe, System::Bfe}) {
    for (Table t : {Table::Ic, Table::SLeft, Table::SRight}) {
      const json j = load_fixture(s, t);
      EXPECT_FALSE(j.at("rows").empty()) << to_string(s) << ' ' << to_string(t);
    }
  }
  EXPECT_EQ(load_fixture(System::Euler, Table::SRight)["rows"].size(), 7u);
  EXPECT_EQ(load_fixture(System::Swe, Table::Ic)["rows"].size(), 5u);
  EXPECT_EQ(load_fixture(System::Bfe, Table::SLeft)["rows"].size(), 6u);
}

TEST(Reproduce, CellsAndSkips) {
  const ReproduceResult r = reproduce_table(System::Euler, Table::SRight);
  const ReproducedCell* tmsa = r.find(5, "TmsA");
  ASSERT_NE(tmsa, nullptr);
  EXPECT_NEAR(tmsa->computed, 6.7847, 1e-4);
  EXPECT_TRUE(tmsa->within_tolerance());
  const ReproducedCell* gp = r.find(1, "GP");
  ASSERT_NE(gp, nullptr);
  EXPECT_TRUE(gp->skipped);
  const ReproducedCell* davis = r.find(2, "DavisB");
  ASSERT_NE(davis, nullptr);
  EXPECT_TRUE(davis->reference_flagged);
  EXPECT_TRUE(davis->violation);

  const ReproduceResult ic = reproduce_table(System::Euler, Table::Ic);
  const ReproducedCell* t6 = ic.find(6, "p_star");
  ASSERT_NE(t6, nullptr);
  EXPECT_TRUE(t6->skipped);
}

TEST(Reproduce, FlaggedCellsAreExactlyTheViolations) {
  for (System s : {System::Euler, System::Swe, System::Bfe}) {
    for (Table t : {Table::SLeft, Table::SRight}) {
      for (const ReproducedCell& c : reproduce_table(s, t).cells) {
        if (c.skipped || c.column == "Exact") continue;
        EXPECT_EQ(c.reference_flagged, c.violation)
            << to_string(s) << ' ' << to_string(t) << " test " << c.test << ' ' << c.column;
      }
    }
  }
}

TEST(Reproduce, BfeStarValuesMatch) {
  EXPECT_TRUE(reproduce_table(System::Bfe, Table::Ic).all_within_tolerance());
  EXPECT_TRUE(reproduce_table(System::Swe, Table::Ic).all_within_tolerance());
}

TEST(Reproduce, ExitCodeReflectsTolerance) {
  std::ostringstream out;
  EXPECT_EQ(cmd_reproduce({System::Bfe, Table::SLeft, Format::Md}, out), exit_code::kOk);
  EXPECT_THAT(out.str(), HasSubstr("max |delta|"));
  std::ostringstream csv;
  EXPECT_EQ(cmd_reproduce({System::Bfe, Table::Ic, Format::Csv}, csv), exit_code::kOk);
}

TEST(SpeedTolerance, Floor) {
  EXPECT_EQ(speed_tolerance(1.0), 1e-3);
  EXPECT_EQ(speed_tolerance(-500.0), 1e-3);
  EXPECT_NEAR(speed_tolerance(-1e4), 1e-2, 1e-15);
  EXPECT_NEAR(speed_tolerance(5e3), 5e-3, 1e-15);
}

TEST(Fuzz, ZeroCountIsUsageError) {
  EXPECT_THROW(run_fuzz(System::Euler, 0, 1), UsageError);
}

TEST(Fuzz, SpecSeedsHaveNoViolations) {
  const FuzzReport e = run_fuzz(System::Euler, 1000, 42);
  EXPECT_EQ(e.trials, 1000u);
  EXPECT_TRUE(e.violations.empty());
  EXPECT_TRUE(run_fuzz(System::Swe, 1000, 7).violations.empty());
  EXPECT_TRUE(run_fuzz(System::Bfe, 1000, 42).violations.empty());
}

TEST(Fuzz, IndependentOfThreadCount) {
  const FuzzReport a = run_fuzz(System::Swe, 2000, 5, 1);
  const FuzzReport b = run_fuzz(System::Swe, 2000, 5, 4);
  EXPECT_EQ(a.redraws, b.redraws);
  std::ostringstream x, y;
  cmd_fuzz(System::Swe, 500, 9, 1, Format::Json, x);
  cmd_fuzz(System::Swe, 500, 9, 3, Format::Json, y);
  EXPECT_EQ(x.str(), y.str());
}

TEST(Fuzz, DrawDependsOnlyOnSeedAndTrial) {
  const json a = problem_json(draw_problem(System::Euler, 42, 17));
  const json b = problem_json(draw_problem(System::Euler, 42, 17));
  const json c = problem_json(draw_problem(System::Euler, 42, 18));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

}  // namespace
}  // namespace riemann_bounds::cli
