#pragma once

// Independent reference implementations used to certify solver results.
// This header deliberately avoids prox.hpp / solver.hpp / legendre.hpp: the
// scalar calculus below is written out again so that a bug in the library
// path cannot hide inside its own oracle.

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bregman/kinds.hpp"

namespace bregman::oracle {

struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  std::size_t dim() const { return lo.size(); }
};

struct GridResult {
  std::vector<double> point;
  double value;
};

// Brute-force minimizer: evaluates a uniform grid, then shrinks the box to
// the cells neighboring the incumbent and repeats. The shrink keeps one
// grid cell on each side of the incumbent, which for the convex desk-scale
// objectives used here cannot lose the minimizer; the shrink factor is
// (points_per_axis-1)/2 per level. Ties break toward the lowest
// lexicographic index.
inline GridResult grid_refine_minimize(
    const std::function<double(const std::vector<double>&)>& objective, Box box,
    int levels = 12, int points_per_axis = 11) {
  const std::size_t d = box.dim();
  if (d == 0 || d > 4)
    throw std::invalid_argument("grid_refine_minimize: dimension must be 1..4");
  if (box.hi.size() != d) throw std::invalid_argument("grid_refine_minimize: box");
  if (points_per_axis < 3)
    throw std::invalid_argument("grid_refine_minimize: need >= 3 points per axis");

  const int ppa = points_per_axis;
  std::vector<double> best_point;
  double best_value = std::numeric_limits<double>::infinity();

  for (int level = 0; level < levels; ++level) {
    std::vector<std::vector<double>> grids(d);
    for (std::size_t a = 0; a < d; ++a) {
      grids[a].resize(ppa);
      for (int j = 0; j < ppa; ++j)
        grids[a][j] = box.lo[a] + (box.hi[a] - box.lo[a]) * j / double(ppa - 1);
    }

    std::vector<int> best_idx;
    double level_best = std::numeric_limits<double>::infinity();
    std::vector<int> idx(d, 0);
    std::vector<double> pt(d);
    const long total = [&] {
      long t = 1;
      for (std::size_t a = 0; a < d; ++a) t *= ppa;
      return t;
    }();
    for (long lin = 0; lin < total; ++lin) {
      long rem = lin;
      for (std::size_t a = d; a-- > 0;) {
        idx[a] = int(rem % ppa);
        rem /= ppa;
      }
      for (std::size_t a = 0; a < d; ++a) pt[a] = grids[a][idx[a]];
      const double v = objective(pt);
      if (v < level_best) {
        level_best = v;
        best_idx = idx;
      }
    }
    if (!std::isfinite(level_best)) {
      if (level == 0)
        throw std::domain_error("grid_refine_minimize: objective infinite on the box");
      break;
    }
    if (level_best < best_value) {
      best_value = level_best;
      best_point.assign(d, 0.0);
      for (std::size_t a = 0; a < d; ++a) best_point[a] = grids[a][best_idx[a]];
    }
    for (std::size_t a = 0; a < d; ++a) {
      const int j = best_idx[a];
      box.lo[a] = grids[a][std::max(j - 1, 0)];
      box.hi[a] = grids[a][std::min(j + 1, ppa - 1)];
    }
  }
  return {best_point, best_value};
}

// ---- independent scalar calculus for stationarity residuals --------------

inline double theta_prime(LegendreKind k, double t) {
  switch (k) {
    case LegendreKind::boltzmann_shannon:
      if (t <= 0.0) throw std::domain_error("oracle: boltzmann_shannon needs t > 0");
      return std::log(t);
    case LegendreKind::fermi_dirac:
      if (t <= 0.0 || t >= 1.0)
        throw std::domain_error("oracle: fermi_dirac needs t in (0,1)");
      return std::log(t / (1.0 - t));
    case LegendreKind::hellinger:
      if (t <= -1.0 || t >= 1.0)
        throw std::domain_error("oracle: hellinger needs t in (-1,1)");
      return t / std::sqrt((1.0 - t) * (1.0 + t));
    case LegendreKind::burg:
      if (t <= 0.0) throw std::domain_error("oracle: burg needs t > 0");
      return -1.0 / t;
    case LegendreKind::half_square:
      return t;
  }
  throw std::domain_error("oracle: unknown legendre kind");
}

// Subgradient interval of phi at eta; throws outside dom phi.
inline std::pair<double, double> phi_subdiff(const ScalarPhiSpec& s, double t) {
  auto pos = [&](const char* what) {
    if (t <= 0.0) throw std::domain_error(std::string("oracle: ") + what +
                                          " needs t > 0");
  };
  switch (s.kind) {
    case PhiKind::zero:
      return {0.0, 0.0};
    case PhiKind::linear_entropy: {
      pos("linear_entropy");
      const double d = std::log(t) + 1.0 - s.omega;
      return {d, d};
    }
    case PhiKind::power: {
      pos("power");
      const double d = std::pow(t, s.p - 1.0);
      return {d, d};
    }
    case PhiKind::neg_power: {
      pos("neg_power");
      const double d = -std::pow(t, -s.p - 1.0);
      return {d, d};
    }
    case PhiKind::neg_root: {
      pos("neg_root");
      const double d = -std::pow(t, s.p - 1.0);
      return {d, d};
    }
    case PhiKind::abs_linear:
      if (t == 0.0) return {-s.alpha, s.alpha};
      return t > 0.0 ? std::pair{s.alpha, s.alpha} : std::pair{-s.alpha, -s.alpha};
    case PhiKind::mirror_entropy: {
      if (t >= 1.0) throw std::domain_error("oracle: mirror_entropy needs t < 1");
      const double d = -std::log(1.0 - t) - 1.0 + s.omega;
      return {d, d};
    }
    case PhiKind::one_minus_log: {
      if (t >= 1.0) throw std::domain_error("oracle: one_minus_log needs t < 1");
      const double d = -std::log(1.0 - t);
      return {d, d};
    }
    case PhiKind::self_hellinger: {
      if (t <= -1.0 || t >= 1.0)
        throw std::domain_error("oracle: self_hellinger needs t in (-1,1)");
      const double d = t / std::sqrt((1.0 - t) * (1.0 + t));
      return {d, d};
    }
    case PhiKind::burg: {
      pos("burg");
      return {-1.0 / t, -1.0 / t};
    }
  }
  throw std::domain_error("oracle: unknown phi kind");
}

// Distance from xi to the set theta'(eta) + gamma * subdiff phi(eta); zero
// means eta satisfies first-order stationarity of gamma*phi + theta - xi*(.).
inline double prox_residual(LegendreKind legendre, const ScalarPhiSpec& phi,
                            double gamma, double xi, double eta) {
  const double tp = theta_prime(legendre, eta);
  const auto [glo, ghi] = phi_subdiff(phi, eta);
  const double lo = tp + gamma * glo;
  const double hi = tp + gamma * ghi;
  if (xi < lo) return lo - xi;
  if (xi > hi) return xi - hi;
  return 0.0;
}

}  // namespace bregman::oracle
