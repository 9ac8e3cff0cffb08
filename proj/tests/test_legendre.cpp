#include <cmath>
#include <random>
#include <gtest/gtest.h>

#include "bregman/legendre.hpp"

using namespace bregman;

namespace {

const LegendreKind kKinds[] = {
    LegendreKind::boltzmann_shannon, LegendreKind::fermi_dirac,
    LegendreKind::hellinger, LegendreKind::burg, LegendreKind::half_square};

// interior sample away from the boundary so finite differences stay valid
double sample_interior(LegendreKind k, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Interval iv = legendre_interior(k);
  if (std::isfinite(iv.lo) && std::isfinite(iv.hi))
    return iv.lo + (iv.hi - iv.lo) * (0.05 + 0.9 * u(rng));
  if (std::isfinite(iv.lo)) return iv.lo + 0.05 + 4.0 * u(rng);
  return 8.0 * u(rng) - 4.0;
}

}  // namespace

TEST(Legendre, BoundaryConventions) {
  EXPECT_DOUBLE_EQ(legendre_value(LegendreKind::boltzmann_shannon, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(legendre_value(LegendreKind::fermi_dirac, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(legendre_value(LegendreKind::fermi_dirac, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(legendre_value(LegendreKind::hellinger, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(legendre_value(LegendreKind::hellinger, -1.0), 0.0);
  EXPECT_EQ(legendre_value(LegendreKind::burg, -1.0), kInf);
  EXPECT_EQ(legendre_value(LegendreKind::boltzmann_shannon, -0.1), kInf);
}

TEST(Legendre, PointValues) {
  EXPECT_DOUBLE_EQ(legendre_value(LegendreKind::boltzmann_shannon, 1.0), -1.0);
  EXPECT_DOUBLE_EQ(legendre_deriv(LegendreKind::boltzmann_shannon, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(legendre_deriv(LegendreKind::fermi_dirac, 0.5), 0.0);
  EXPECT_DOUBLE_EQ(legendre_deriv(LegendreKind::burg, 2.0), -0.5);
  EXPECT_DOUBLE_EQ(legendre_conj_deriv(LegendreKind::boltzmann_shannon, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(legendre_conj_deriv(LegendreKind::burg, -1.0), 1.0);
}

TEST(Legendre, GradientDomainErrors) {
  EXPECT_THROW(legendre_deriv(LegendreKind::boltzmann_shannon, 0.0),
               std::domain_error);
  EXPECT_THROW(legendre_deriv(LegendreKind::fermi_dirac, 1.0), std::domain_error);
  EXPECT_THROW(legendre_conj_deriv(LegendreKind::burg, 0.5), std::domain_error);
}

TEST(Legendre, FiniteDifferenceGradient) {
  std::mt19937 rng(7);
  for (LegendreKind k : kKinds) {
    for (int s = 0; s < 64; ++s) {
      const double t = sample_interior(k, rng);
      const double h = 1e-6 * std::max(1.0, std::abs(t));
      const double fd =
          (legendre_value(k, t + h) - legendre_value(k, t - h)) / (2.0 * h);
      const double g = legendre_deriv(k, t);
      EXPECT_NEAR(fd, g, 1e-6 * std::max(1.0, std::abs(g)))
          << to_string(k) << " at " << t;
    }
  }
}

TEST(Legendre, GradientInversion) {
  std::mt19937 rng(11);
  for (LegendreKind k : kKinds) {
    for (int s = 0; s < 64; ++s) {
      const double t = sample_interior(k, rng);
      const double back = legendre_conj_deriv(k, legendre_deriv(k, t));
      EXPECT_NEAR(back, t, 1e-10 * std::max(1.0, std::abs(t)))
          << to_string(k) << " at " << t;
    }
  }
}

TEST(Legendre, BregmanPointValues) {
  EXPECT_NEAR(bregman_scalar(LegendreKind::boltzmann_shannon, 2.0, 1.0),
              2.0 * std::log(2.0) - 1.0, 1e-15);
  EXPECT_NEAR(bregman_scalar(LegendreKind::burg, 1.0, 2.0),
              std::log(2.0) - 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(bregman_scalar(LegendreKind::boltzmann_shannon, 0.0, 1.0), 1.0);
  EXPECT_EQ(bregman_scalar(LegendreKind::burg, -1.0, 1.0), kInf);
  EXPECT_EQ(bregman_scalar(LegendreKind::burg, 1.0, -1.0), kInf);
}

TEST(Legendre, BregmanNonnegativeAndStrict) {
  std::mt19937 rng(13);
  for (LegendreKind k : kKinds) {
    for (int s = 0; s < 200; ++s) {
      const double x = sample_interior(k, rng);
      const double y = sample_interior(k, rng);
      const double d = bregman_scalar(k, x, y);
      EXPECT_GE(d, 0.0);
      EXPECT_DOUBLE_EQ(bregman_scalar(k, x, x), 0.0);
      if (std::abs(x - y) > 1e-3) EXPECT_GT(d, 1e-12);
    }
  }
}

TEST(Legendre, ThreePointIdentity) {
  // <x-y, grad(x)-grad(y)> = D(x,y) + D(y,x)
  std::mt19937 rng(17);
  for (LegendreKind k : kKinds) {
    for (int s = 0; s < 64; ++s) {
      const double x = sample_interior(k, rng);
      const double y = sample_interior(k, rng);
      const double lhs = (x - y) * (legendre_deriv(k, x) - legendre_deriv(k, y));
      const double rhs = bregman_scalar(k, x, y) + bregman_scalar(k, y, x);
      EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST(Legendre, SeparableSumsMatchScalars) {
  LegendreFunction f{{LegendreKind::boltzmann_shannon, LegendreKind::burg,
                      LegendreKind::half_square}};
  const Vector x{2.0, 0.5, -1.0}, y{1.0, 1.5, 2.0};
  EXPECT_DOUBLE_EQ(eval(f, x), legendre_value(f.coords[0], x[0]) +
                                   legendre_value(f.coords[1], x[1]) +
                                   legendre_value(f.coords[2], x[2]));
  const Vector g = grad(f, x);
  for (int i = 0; i < 3; ++i)
    EXPECT_DOUBLE_EQ(g[i], legendre_deriv(f.coords[i], x[i]));
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += bregman_scalar(f.coords[i], x[i], y[i]);
  EXPECT_DOUBLE_EQ(bregman::bregman(f, x, y), s);
}

TEST(Legendre, DimensionMismatch) {
  LegendreFunction f = LegendreFunction::uniform(LegendreKind::burg, 2);
  EXPECT_THROW(eval(f, {1.0}), std::invalid_argument);
  EXPECT_THROW(grad(f, {1.0, 2.0, 3.0}), std::invalid_argument);
  EXPECT_THROW(bregman::bregman(f, {1.0, 2.0}, {1.0}), std::invalid_argument);
}

TEST(Legendre, InteriorPredicates) {
  LegendreFunction f = LegendreFunction::uniform(LegendreKind::fermi_dirac, 2);
  EXPECT_TRUE(f.interior_contains({0.5, 0.9}));
  EXPECT_FALSE(f.interior_contains({0.0, 0.5}));
  EXPECT_TRUE(f.domain_contains({0.0, 1.0}));
  EXPECT_FALSE(f.domain_contains({-0.1, 0.5}));
  EXPECT_FALSE(f.interior_contains({0.5}));  // wrong dimension
}
