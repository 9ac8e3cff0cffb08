#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace bregman {

// Interval known to contain the sought value of a strictly increasing function.
struct Bracket {
  double lo;
  double hi;
};

struct bracket_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct convergence_error : std::runtime_error {
  double best;  // best point found before hitting the iteration cap
  convergence_error(const std::string& msg, double best_point)
      : std::runtime_error(msg), best(best_point) {}
};

// Solves g(t) = target for a strictly increasing continuous g on [lo, hi].
// Safeguarded bisection; Newton steps are taken when a derivative is supplied
// and the candidate stays inside the current bracket.
inline double solve_monotone_scalar(
    const std::function<double(double)>& g, double target, Bracket br,
    double tol = 1e-12, const std::function<double(double)>& dg = nullptr,
    int max_iter = 200) {
  if (!(br.lo < br.hi)) throw bracket_error("solve_monotone_scalar: empty bracket");
  double lo = br.lo, hi = br.hi;
  double flo = g(lo) - target;
  double fhi = g(hi) - target;
  if (flo > 0.0 || fhi < 0.0)
    throw bracket_error("solve_monotone_scalar: target outside [g(lo), g(hi)]");
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;

  double t = 0.5 * (lo + hi);
  double ft = g(t) - target;
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(ft) <= tol) return t;
    if (ft > 0.0) hi = t; else lo = t;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::max(std::abs(lo), std::abs(hi))))
      return t;  // bracket exhausted at double resolution

    double next = 0.5 * (lo + hi);
    if (dg) {
      const double d = dg(t);
      if (d > 0.0 && std::isfinite(d)) {
        const double cand = t - ft / d;
        if (cand > lo && cand < hi) next = cand;
      }
    }
    t = next;
    ft = g(t) - target;
  }
  if (std::abs(ft) <= tol) return t;
  throw convergence_error("solve_monotone_scalar: no convergence after " +
                              std::to_string(max_iter) + " iterations, best residual " +
                              std::to_string(std::abs(ft)),
                          t);
}

}  // namespace bregman
