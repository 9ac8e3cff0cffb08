#include <cmath>
#include <gtest/gtest.h>

#include "bregman/root_find.hpp"

using bregman::Bracket;
using bregman::solve_monotone_scalar;

TEST(RootFind, CubeRoot) {
  auto g = [](double t) { return t * t * t; };
  const double r = solve_monotone_scalar(g, 8.0, {0.0, 5.0});
  EXPECT_NEAR(r, 2.0, 1e-10);
}

TEST(RootFind, NewtonAccelerated) {
  auto g = [](double t) { return std::exp(t) + t; };
  auto dg = [](double t) { return std::exp(t) + 1.0; };
  const double r = solve_monotone_scalar(g, 3.0, {-5.0, 5.0}, 1e-14, dg);
  EXPECT_NEAR(std::exp(r) + r, 3.0, 1e-13);
}

TEST(RootFind, EndpointHit) {
  auto g = [](double t) { return t; };
  EXPECT_DOUBLE_EQ(solve_monotone_scalar(g, 1.0, {1.0, 2.0}), 1.0);
  EXPECT_DOUBLE_EQ(solve_monotone_scalar(g, 2.0, {1.0, 2.0}), 2.0);
}

TEST(RootFind, TargetOutsideBracket) {
  auto g = [](double t) { return t; };
  EXPECT_THROW(solve_monotone_scalar(g, 5.0, {0.0, 1.0}), bregman::bracket_error);
  EXPECT_THROW(solve_monotone_scalar(g, -1.0, {0.0, 1.0}), bregman::bracket_error);
}

TEST(RootFind, EmptyBracket) {
  auto g = [](double t) { return t; };
  EXPECT_THROW(solve_monotone_scalar(g, 0.0, {1.0, 1.0}), bregman::bracket_error);
  EXPECT_THROW(solve_monotone_scalar(g, 0.0, {2.0, 1.0}), bregman::bracket_error);
}

TEST(RootFind, SteepFunction) {
  auto g = [](double t) { return std::log(t); };
  auto dg = [](double t) { return 1.0 / t; };
  const double r = solve_monotone_scalar(g, -20.0, {1e-12, 1.0}, 1e-12, dg);
  EXPECT_NEAR(std::log(r), -20.0, 1e-10);
}
