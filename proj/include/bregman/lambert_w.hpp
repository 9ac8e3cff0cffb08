#pragma once

#include <cmath>
#include <stdexcept>

namespace bregman {

// Principal branch of the Lambert W function, the inverse of w -> w*e^w on
// [-1/e, inf). Halley iteration from a piecewise initial guess; the series
// expansion around the branch point keeps the flat-derivative region stable.
inline double lambert_w0(double x) {
  const double inv_e = std::exp(-1.0);
  if (std::isnan(x) || x < -inv_e - 1e-15 * (1.0 + inv_e))
    throw std::domain_error("lambert_w0: argument below -1/e");
  if (x <= -inv_e) return -1.0;  // branch point (within round-off)
  if (x == 0.0) return 0.0;

  double w;
  if (x < -0.25) {
    // branch-point series in q = sqrt(2(e*x + 1))
    const double q = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
    w = -1.0 + q - q * q / 3.0 + 11.0 / 72.0 * q * q * q;
  } else if (x < 3.0) {
    w = x / (1.0 + x);  // crude, fixed by the iteration below
  } else {
    const double lx = std::log(x);
    w = lx - std::log(lx);
  }

  for (int it = 0; it < 50; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= 1e-14 * std::max(1.0, std::abs(x))) break;
    const double wp1 = w + 1.0;
    // Halley step: f' = e^w (w+1), f'' = e^w (w+2)
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0 || !std::isfinite(denom)) break;
    const double step = f / denom;
    w -= step;
    if (w < -1.0) w = -1.0 + 1e-300;  // stay on the principal branch
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(w))) break;
  }
  return w;
}

}  // namespace bregman
