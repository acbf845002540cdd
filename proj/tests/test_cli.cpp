#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "suites.hpp"

using namespace rootharm;
using namespace rootharm::cli;

namespace {

RunConfig config(const std::string& type, int height, const std::string& k = {}) {
  RunConfig c;
  c.type = type;
  c.height = height;
  c.k = k;
  return c;
}

int exit_code(const std::string& args) {
  std::string cmd = std::string(ROOTHARM_CLI) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, VerifyExamples) {
  EXPECT_TRUE(run_suite("commutativity", config("A2", 4)).pass);

  Report norms = run_suite("norms", config("A1", 4, "2"));
  ASSERT_TRUE(norms.pass);
  EXPECT_EQ(norms.details["cases"][0]["details"]["<1,1>"], "3");

  Report nonsym = run_suite("shift-nonsym", config("BC1", 6));
  ASSERT_TRUE(nonsym.pass);
  EXPECT_EQ(nonsym.details["cases"][0]["details"]["kernel_dimension"], 0);
}

TEST(Cli, Tables) {
  Json e = make_table("E", config("A1", 2));
  bool found = false;
  for (const auto& row : e)
    if (row["mu"] == "[-1]") {
      found = true;
      EXPECT_EQ(row["E"], "(k/(k + 1))*X + X^-1");
    }
  EXPECT_TRUE(found);

  RunConfig s = config("A1", -1);
  s.lambda = "0..3";
  Json sat = make_table("satake", s);
  ASSERT_EQ(sat.size(), 4u);
  EXPECT_EQ(sat[0]["spherical_value"], "1");
  EXPECT_EQ(sat[1]["satake_image"], "(q/(q + 1))*X + (q/(q + 1))*X^-1");

  Json c = make_table("cfun", config("A1", -1));
  EXPECT_EQ(c[0]["value"], "Gamma(l1)/(Gamma(k + l1))");
}

TEST(Cli, ConfigErrors) {
  EXPECT_THROW(run_suite("nope", {}), ConfigError);
  EXPECT_THROW(run_suite("commutativity", config("Q3", 2)), ConfigError);
  RunConfig bad = config("A2", 2);
  bad.format = "xml";
  EXPECT_THROW(run_suite("commutativity", bad), ConfigError);
  RunConfig rank = config("A", 2);
  EXPECT_THROW(rank.label(), ConfigError);
  rank.rank = 2;
  EXPECT_EQ(rank.label(), "A2");
  EXPECT_THROW(run_suite("norms", config("A1", 2, "1,2,3")), ConfigError);
}

TEST(Cli, CsvQuoting) {
  Json rows = Json::array({Json{{"a", "x,y"}, {"b", "say \"hi\""}}});
  EXPECT_EQ(render_table(rows, "csv"), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
}

TEST(Cli, ExitCodesAndDeterminism) {
  EXPECT_EQ(exit_code("verify commutativity --type A2 --height 2"), 0);
  EXPECT_EQ(exit_code("verify commutativity --type Z2"), 2);
  EXPECT_EQ(exit_code("verify no-such-suite"), 2);
  EXPECT_EQ(exit_code("table E --type A1 --k 1,2"), 2);
  // k = -1 makes E(-alpha/2,k) collide with E(0,k); the eigenvalue check reports it.
  EXPECT_EQ(exit_code("verify jacobi-orthogonality --type A1 --k -1 --height 2"), 1);

  std::string a = testing::TempDir() + "/rh_a.json", b = testing::TempDir() + "/rh_b.json";
  for (const auto& out : {a, b})
    ASSERT_EQ(exit_code("verify shift-compose --type A1 --height 3 --out " + out), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}
