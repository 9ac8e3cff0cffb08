// Drives the installed binary end to end and checks the exit-code contract:
// 0 solved, 1 parse/unknown kind, 2 bad schedule, 3 domain, 4 max-iter.

#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <gtest/gtest.h>

#include "bregman/trace_io.hpp"

namespace {

int run(const std::string& args) {
  const std::string cmd =
      std::string(BREGMAN_CLI_PATH) + " " + args + " >cli_out.txt 2>cli_err.txt";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const char* path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const char* path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

const char* kKlToy = R"([problem]
kind = composite
m = 1
p = 1
omega = 2
rho = 6
[legendre]
1 = boltzmann_shannon
[psi]
1 = boltzmann_shannon
[solver]
beta = 0.5
gamma = 0.25
eps = 0.05
max_iter = 200
tol = 1e-9
x0 = 1
)";

}  // namespace

TEST(Cli, LambertW) {
  EXPECT_EQ(run("lambertw 1"), 0);
  EXPECT_NE(slurp("cli_out.txt").find("0.5671432904"), std::string::npos);
  EXPECT_EQ(run("lambertw -- -1"), 3);
}

TEST(Cli, Prox) {
  EXPECT_EQ(run("prox hellinger self_hellinger --gamma 1 --xi 3"), 0);
  EXPECT_NE(slurp("cli_out.txt").find("0.83205029"), std::string::npos);
  EXPECT_EQ(run("prox burg abs_linear --alpha 1 --gamma 1 --xi -1"), 0);
  EXPECT_NE(slurp("cli_out.txt").find("eta: 0.5"), std::string::npos);
  EXPECT_EQ(run("prox boltzmann_shannon power --p 1 --gamma 1 --xi 1"), 0);
  // out-of-domain xi and unknown kinds
  EXPECT_EQ(run("prox burg burg --gamma 1 --xi 5"), 3);
  EXPECT_EQ(run("prox sparkle zero --gamma 1 --xi 0"), 1);
  EXPECT_EQ(run("prox burg sparkle --gamma 1 --xi -1"), 1);
}

TEST(Cli, ValidateSchedule) {
  EXPECT_EQ(run("validate-schedule --beta 0.5 --eps 0.05 --gamma 0.25"), 0);
  EXPECT_EQ(run("validate-schedule --beta 1 --eps 0.1 --gamma 0.3 0.2 --eta 0.1 "
                "--horizon 2"),
            2);
  EXPECT_NE(slurp("cli_out.txt").find("0.13"), std::string::npos);
  EXPECT_EQ(run("validate-schedule --beta 0.5 --eps 0.05 --gamma 0.5"), 2);
}

TEST(Cli, SolveToTolerance) {
  write_file("kl_toy.ini", kKlToy);
  EXPECT_EQ(run("solve kl_toy.ini"), 0);
  const std::string out = slurp("cli_out.txt");
  EXPECT_NE(out.find("stop reason: tolerance met"), std::string::npos);
  const auto pos = out.find("final point: ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NEAR(std::strtod(out.c_str() + pos + 13, nullptr), 3.0, 1e-6);
}

TEST(Cli, SolveWritesTrace) {
  write_file("kl_toy.ini", kKlToy);
  EXPECT_EQ(run("solve kl_toy.ini --trace kl_trace.csv --ref 3"), 0);
  std::ifstream in("kl_trace.csv");
  ASSERT_TRUE(in.good());
  const auto rows = bregman::read_trace_csv(in);
  ASSERT_GT(rows.size(), 2u);
  EXPECT_EQ(rows.front().n, 0u);
  // objective column nonincreasing, ref column finite
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(rows[i].objective, rows[i - 1].objective + 1e-12);
    EXPECT_TRUE(std::isfinite(rows[i].bregman_ref));
  }
}

TEST(Cli, SolveMaxIter) {
  write_file("kl_toy.ini", kKlToy);
  EXPECT_EQ(run("solve kl_toy.ini --max-iter 3"), 4);
}

TEST(Cli, SolveBadSchedule) {
  std::string bad = kKlToy;
  bad.replace(bad.find("gamma = 0.25"), 12, "gamma = 0.60");
  write_file("kl_bad_gamma.ini", bad);
  EXPECT_EQ(run("solve kl_bad_gamma.ini"), 2);
  EXPECT_NE(slurp("cli_err.txt").find("invalid schedule"), std::string::npos);
}

TEST(Cli, SolveBoundaryStart) {
  std::string is_toy = R"([problem]
kind = is_regression
m = 1
p = 1
omega = 1
rho = 1
[phi]
1 = abs_linear 1
[solver]
gamma = 0.45
max_iter = 500
x0 = 0
)";
  write_file("is_boundary.ini", is_toy);
  EXPECT_EQ(run("solve is_boundary.ini"), 3);
}

TEST(Cli, ParseErrors) {
  write_file("broken.ini", "[problem]\nkind = composite\nm = one\n");
  EXPECT_EQ(run("solve broken.ini"), 1);
  EXPECT_NE(slurp("cli_err.txt").find("line 3"), std::string::npos);
  EXPECT_EQ(run("solve no_such_file.ini"), 1);
  EXPECT_EQ(run("solve kl_toy.ini --ref 1 2 3"), 1);
}

TEST(Cli, RegressionSolve) {
  std::string is_toy = R"([problem]
kind = is_regression
m = 1
p = 1
omega = 1
rho = 1
[phi]
1 = abs_linear 1
[solver]
gamma = 0.45
max_iter = 500
tol = 1e-10
x0 = 2
)";
  write_file("is_toy.ini", is_toy);
  EXPECT_EQ(run("solve is_toy.ini"), 0);
  EXPECT_NE(slurp("cli_out.txt").find("final point: 0.5"), std::string::npos);
}
