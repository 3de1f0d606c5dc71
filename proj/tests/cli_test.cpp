#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli_app.hpp"

using namespace mdioph;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mdioph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::filesystem::path golden(const std::string& name) { return std::filesystem::path(MDIOPH_GOLDEN_DIR) / name; }

}  // namespace

TEST(CliSolve, ExampleOnePositiveOnly) {
  const auto r = run_cli({"solve", "--p", "13", "--q", "3", "--l", "3", "--positive-only"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(x, y, z) = (2, 5, 2731)"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("(x, y, z) = (0, 1, 1)"), std::string::npos);
  EXPECT_NE(r.out.find("FilteredNonPositive"), std::string::npos);
}

TEST(CliSolve, NoSolutionsIsSuccess) {
  const auto r = run_cli({"solve", "--p", "3", "--q", "2", "--l", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("no solutions"), std::string::npos);
  EXPECT_NE(r.out.find("l = 7 does not divide 2^p + 1 = 9"), std::string::npos);
}

TEST(CliSolve, ValidationErrors) {
  EXPECT_EQ(run_cli({"solve", "--p", "4", "--q", "3", "--l", "3"}).code, 2);
  EXPECT_EQ(run_cli({"solve", "--p", "11", "--q", "3", "--l", "3"}).code, 2);
  EXPECT_EQ(run_cli({"solve", "--p", "13", "--q", "3", "--l", "15"}).code, 2);
  EXPECT_EQ(run_cli({"solve", "--p", "13", "--q", "3", "--l", "abc"}).code, 2);
  EXPECT_EQ(run_cli({"solve", "--q", "3", "--l", "3"}).code, 2);
  EXPECT_EQ(run_cli({"solve", "--p", "13", "--mp", "8191", "--q", "3", "--l", "3"}).code, 2);
  EXPECT_EQ(run_cli({"solve", "--p", "13", "--q", "3", "--l", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  const auto r = run_cli({"solve", "--p", "4", "--q", "3", "--l", "3"});
  EXPECT_NE(r.err.find("not prime"), std::string::npos);
}

TEST(CliSolve, ValueFormMatchesExponentForm) {
  const auto a = run_cli({"solve", "--mp", "8191", "--mq", "7", "--l", "3", "--format", "json"});
  const auto b = run_cli({"solve", "--p", "13", "--q", "3", "--l", "3", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run_cli({"solve", "--mp", "15", "--q", "3", "--l", "3"}).code, 2);
}

TEST(CliSolve, JsonRoundTripsToLibraryResult) {
  for (bool positive : {false, true}) {
    std::vector<std::string> args{"solve", "--p", "13", "--q", "3", "--l", "3", "--format", "json"};
    if (positive) args.push_back("--positive-only");
    const auto r = run_cli(args);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(solution_set_from_json(Json::parse(r.out)),
              classify(EquationInstance::from_exponents(13, 3, 3), positive));
  }
}

TEST(CliSolve, MatchesGoldenFiles) {
  EXPECT_EQ(run_cli({"solve", "--p", "13", "--q", "3", "--l", "3", "--format", "json"}).out,
            slurp(golden("solve_p13_q3_l3.json")));
  EXPECT_EQ(run_cli({"solve", "--p", "3", "--q", "2", "--l", "7", "--format", "json"}).out,
            slurp(golden("solve_p3_q2_l7.json")));
  EXPECT_EQ(run_cli({"solve", "--p", "13", "--q", "5", "--l", "3", "--format", "csv"}).out,
            slurp(golden("solve_p13_q5_l3.csv")));
}

TEST(CliSolve, RepeatedRunsAreByteIdentical) {
  for (const char* fmt : {"text", "json", "csv"}) {
    const std::vector<std::string> args{"solve", "--p", "13", "--q", "3", "--l", "3", "--format", fmt};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  }
}

TEST(CliSolve, WritesToOutPath) {
  const auto path = std::filesystem::temp_directory_path() / "mdioph_cli_solve.json";
  std::filesystem::remove(path);
  const auto r = run_cli({"solve", "--p", "13", "--q", "5", "--l", "3", "--format", "json", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(solution_set_from_json(Json::parse(slurp(path))), classify(EquationInstance::from_exponents(13, 5, 3)));
  std::filesystem::remove(path);
}

TEST(CliVerify, TrueAndFalse) {
  auto r = run_cli({"verify", "--p", "13", "--q", "3", "--l", "3", "--x", "2", "--y", "5", "--z", "2731"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holds: true"), std::string::npos);
  r = run_cli({"verify", "--p", "2", "--q", "3", "--l", "5", "--x", "1", "--y", "1", "--z", "1", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(Json::parse(r.out).at("holds").get<bool>());
}

TEST(CliSearch, DefaultsAndBounds) {
  auto r = run_cli({"search", "--p", "13", "--q", "3", "--l", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto set = solution_set_from_json(Json::parse(r.out));
  EXPECT_EQ(set.triples().size(), 2u);

  r = run_cli({"search", "--p", "13", "--q", "3", "--l", "3", "--z-max", "100", "--threads", "3"});
  EXPECT_NE(r.out.find("(0, 1, 1)"), std::string::npos);
  EXPECT_EQ(r.out.find("2731"), std::string::npos);

  r = run_cli({"search", "--p", "3", "--q", "7", "--l", "5", "--x-max", "10", "--y-max", "10"});
  EXPECT_NE(r.out.find("no solutions"), std::string::npos);
}

TEST(CliTables, WritesNamedFilesMatchingGolden) {
  const auto dir = std::filesystem::temp_directory_path() / "mdioph_cli_tables";
  std::filesystem::remove_all(dir);
  const auto r = run_cli({"tables", "--p-limit", "7", "--format", "csv", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(dir / "table1_p7.csv"), slurp(golden("table1_p7.csv")));
  EXPECT_EQ(slurp(dir / "table2.csv"), slurp(golden("table2.csv")));

  const auto rj = run_cli({"tables", "--p-limit", "7", "--format", "json", "--out", dir.string()});
  ASSERT_EQ(rj.code, 0);
  EXPECT_EQ(slurp(dir / "table1_p7.json"), slurp(golden("table1_p7.json")));
  std::filesystem::remove_all(dir);
}

TEST(CliTables, CapExceededExitCode) {
  const auto r = run_cli({"tables", "--p-limit", "89"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
  EXPECT_EQ(run_cli({"mersenne", "--p-limit", "89"}).code, 3);
  EXPECT_EQ(run_cli({"tables", "--p-limit", "1"}).code, 2);
}

TEST(CliMersenne, ListsExponents) {
  const auto r = run_cli({"mersenne", "--p-limit", "13", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 5u);
  EXPECT_EQ(j[4].at("p"), 13);
  EXPECT_EQ(j[4].at("mp_mod4"), 3);
  EXPECT_EQ(j[4].at("admissible_q"), Json::parse("[3,5]"));
  EXPECT_EQ(j[4].at("admissible_l"), Json::parse(R"(["3","2731"])"));
}

TEST(CliHelp, ExitsZero) { EXPECT_EQ(run_cli({"--help"}).code, 0); }
