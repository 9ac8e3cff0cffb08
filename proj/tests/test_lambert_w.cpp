#include <cmath>
#include <gtest/gtest.h>

#include "bregman/lambert_w.hpp"

using bregman::lambert_w0;

TEST(LambertW, KnownValues) {
  EXPECT_DOUBLE_EQ(lambert_w0(0.0), 0.0);
  EXPECT_NEAR(lambert_w0(std::exp(1.0)), 1.0, 1e-14);
  EXPECT_NEAR(lambert_w0(1.0), 0.56714329040978387, 1e-14);  // omega constant
  EXPECT_NEAR(lambert_w0(2.0 * std::exp(2.0)), 2.0, 1e-13);
}

TEST(LambertW, BranchPoint) {
  const double bp = -1.0 / std::exp(1.0);
  EXPECT_NEAR(lambert_w0(bp), -1.0, 1e-7);
  EXPECT_NEAR(lambert_w0(bp + 1e-10), -1.0, 3e-5);
}

TEST(LambertW, DomainError) {
  EXPECT_THROW(lambert_w0(-1.0), std::domain_error);
  EXPECT_THROW(lambert_w0(-0.5), std::domain_error);
}

TEST(LambertW, InverseResidualGrid) {
  // log-spaced in x + 1/e over the range the prox catalog exercises
  const double shift = 1.0 / std::exp(1.0);
  const double lo = 1e-12, hi = 1e6 + shift;
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double s = lo * std::pow(hi / lo, i / 1999.0);
    const double x = s - shift;
    const double w = lambert_w0(x);
    worst = std::max(worst,
                     std::abs(w * std::exp(w) - x) / std::max(1.0, std::abs(x)));
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(LambertW, Monotone) {
  double prev = lambert_w0(-0.3);
  for (double x = -0.2; x < 10.0; x += 0.1) {
    const double w = lambert_w0(x);
    EXPECT_GT(w, prev);
    prev = w;
  }
}
