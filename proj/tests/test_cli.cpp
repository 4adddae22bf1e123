#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "catgeo/cli.hpp"
#include "catgeo/errors.hpp"

using namespace catgeo;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "catgeo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream is(line);
  for (std::string c; std::getline(is, c, ',');) v.push_back(c);
  return v;
}

}  // namespace

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_range("0.5"), std::vector<double>{0.5});
  const auto r = parse_range("0:1:0.25");
  ASSERT_EQ(r.size(), 5u);
  EXPECT_DOUBLE_EQ(r.back(), 1.0);
  EXPECT_EQ(parse_range("0:1").size(), 11u);
  EXPECT_EQ(parse_range("0:0.3:0.1").size(), 4u);
}

TEST(ParseRange, Errors) {
  EXPECT_THROW(parse_range(""), DomainError);
  EXPECT_THROW(parse_range("a:b"), DomainError);
  EXPECT_THROW(parse_range("1:0.5"), DomainError);
  EXPECT_THROW(parse_range("0:1:0"), DomainError);
  EXPECT_THROW(parse_range("0:1:2:3"), DomainError);
}

TEST(Cli, CircumferenceTableCsv) {
  const Result r = run({"table", "circumference", "--K", "-1", "--k", "0.5:1.5:0.5", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], "K,k,exact,closed_form,difference");
  // Equidistant curves and horocycles are open.
  EXPECT_EQ(cells(ls[1])[2], "inf");
  EXPECT_EQ(cells(ls[2])[2], "inf");
  EXPECT_NEAR(std::stod(cells(ls[3])[2]), 2 * std::numbers::pi / std::sqrt(1.25), 1e-12);
}

TEST(Cli, ArcChordDefectApproachesCurvatureSquaredOver24) {
  const Result r = run({"table", "arcchord", "--k", "1", "--s", "0.05:0.45:0.2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  double prev = 0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const double defect = std::stod(cells(ls[i]).back());
    EXPECT_LT(defect, 1.0 / 24);
    if (i > 1) EXPECT_LT(defect, prev);
    prev = defect;
  }
  EXPECT_NEAR(std::stod(cells(ls[1]).back()), 1.0 / 24, 1e-4);
}

TEST(Cli, JsonTableHasColumnsAndRows) {
  const Result r = run({"table", "lipschitz", "--K", "1", "--k", "1", "--d", "0.01"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"table\": \"lipschitz\""), std::string::npos);
  EXPECT_NE(r.out.find("\"rows\""), std::string::npos);
}

TEST(Cli, InjectivityOfUnitCircle) {
  const Result r = run({"verify", "inj", "--K", "1", "--A", "0", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(cells(ls[0])[1], "value");
  EXPECT_NEAR(std::stod(cells(ls[1])[1]), std::numbers::pi, 1e-15);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"verify", "fermi", "--n", "200"}).code, 0);
  EXPECT_EQ(run({"verify", "projbound"}).code, 0);
  // A negative absolute tolerance turns the bound into a failing check.
  EXPECT_EQ(run({"verify", "projbound", "--tol", "-1"}).code, 1);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"table", "arcchord", "--s", "1:0.5"}).code, 2);
  EXPECT_EQ(run({"verify", "gauss", "--scenario", "no_such_scenario"}).code, 2);
  const Result r = run({"verify", "tube", "--rho", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}
