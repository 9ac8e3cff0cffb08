#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bregman/kinds.hpp"

namespace bregman {

using Vector = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Open interval; +-inf endpoints mean unbounded.
struct Interval {
  double lo;
  double hi;
  bool contains(double t) const { return t > lo && t < hi; }
};

// ---- scalar Legendre catalog --------------------------------------------
//
// Conventions at the domain boundary: 0 ln 0 := 0, so the Boltzmann-Shannon
// value at 0 is 0, the Fermi-Dirac value at {0,1} is 0 and the Hellinger
// value at +-1 is 0. Gradients are interior-only.

inline Interval legendre_interior(LegendreKind k) {
  switch (k) {
    case LegendreKind::boltzmann_shannon: return {0.0, kInf};
    case LegendreKind::fermi_dirac: return {0.0, 1.0};
    case LegendreKind::hellinger: return {-1.0, 1.0};
    case LegendreKind::burg: return {0.0, kInf};
    case LegendreKind::half_square: return {-kInf, kInf};
  }
  return {0, 0};
}

inline bool legendre_domain_contains(LegendreKind k, double t) {
  switch (k) {
    case LegendreKind::boltzmann_shannon: return t >= 0.0;
    case LegendreKind::fermi_dirac: return t >= 0.0 && t <= 1.0;
    case LegendreKind::hellinger: return t >= -1.0 && t <= 1.0;
    case LegendreKind::burg: return t > 0.0;
    case LegendreKind::half_square: return true;
  }
  return false;
}

inline double legendre_value(LegendreKind k, double t) {
  switch (k) {
    case LegendreKind::boltzmann_shannon:
      if (t < 0.0) return kInf;
      return t == 0.0 ? 0.0 : t * std::log(t) - t;
    case LegendreKind::fermi_dirac:
      if (t < 0.0 || t > 1.0) return kInf;
      if (t == 0.0 || t == 1.0) return 0.0;
      return t * std::log(t) + (1.0 - t) * std::log(1.0 - t);
    case LegendreKind::hellinger:
      if (t < -1.0 || t > 1.0) return kInf;
      return -std::sqrt(1.0 - t * t);
    case LegendreKind::burg:
      return t > 0.0 ? -std::log(t) : kInf;
    case LegendreKind::half_square:
      return 0.5 * t * t;
  }
  return kInf;
}

inline double legendre_deriv(LegendreKind k, double t) {
  if (!legendre_interior(k).contains(t))
    throw std::domain_error("legendre_deriv: " + to_string(k) +
                            " gradient undefined at " + std::to_string(t));
  switch (k) {
    case LegendreKind::boltzmann_shannon: return std::log(t);
    case LegendreKind::fermi_dirac: return std::log(t) - std::log(1.0 - t);
    case LegendreKind::hellinger: return t / std::sqrt(1.0 - t * t);
    case LegendreKind::burg: return -1.0 / t;
    case LegendreKind::half_square: return t;
  }
  return 0.0;
}

inline double legendre_second_deriv(LegendreKind k, double t) {
  switch (k) {
    case LegendreKind::boltzmann_shannon: return 1.0 / t;
    case LegendreKind::fermi_dirac: return 1.0 / (t * (1.0 - t));
    case LegendreKind::hellinger: return std::pow(1.0 - t * t, -1.5);
    case LegendreKind::burg: return 1.0 / (t * t);
    case LegendreKind::half_square: return 1.0;
  }
  return 0.0;
}

// Interior of dom(theta*): all of R for the cofinite kinds, the negative
// half-line for Burg.
inline Interval legendre_conj_interior(LegendreKind k) {
  if (k == LegendreKind::burg) return {-kInf, 0.0};
  return {-kInf, kInf};
}

// (theta*)' inverts theta' between domain interiors.
inline double legendre_conj_deriv(LegendreKind k, double s) {
  switch (k) {
    case LegendreKind::boltzmann_shannon: return std::exp(s);
    case LegendreKind::fermi_dirac: return 1.0 / (1.0 + std::exp(-s));
    case LegendreKind::hellinger: return s / std::sqrt(1.0 + s * s);
    case LegendreKind::burg:
      if (s >= 0.0)
        throw std::domain_error("legendre_conj_deriv: burg needs a negative argument");
      return -1.0 / s;
    case LegendreKind::half_square: return s;
  }
  return 0.0;
}

// Scalar Bregman distance generated by theta; +inf when y leaves the
// interior or x leaves dom theta.
inline double bregman_scalar(LegendreKind k, double x, double y) {
  if (!legendre_interior(k).contains(y)) return kInf;
  if (!legendre_domain_contains(k, x)) return kInf;
  const double d =
      legendre_value(k, x) - legendre_value(k, y) - (x - y) * legendre_deriv(k, y);
  if (d < 0.0 && d > -1e-14 * std::max(1.0, std::abs(legendre_value(k, x))))
    return 0.0;  // round-off clamp; anything more negative is surfaced
  return d;
}

// ---- separable sums ------------------------------------------------------

struct LegendreFunction {
  std::vector<LegendreKind> coords;

  std::size_t dim() const { return coords.size(); }

  static LegendreFunction uniform(LegendreKind k, std::size_t m) {
    return LegendreFunction{std::vector<LegendreKind>(m, k)};
  }

  bool interior_contains(const Vector& x) const {
    if (x.size() != coords.size()) return false;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!legendre_interior(coords[i]).contains(x[i])) return false;
    return true;
  }

  bool domain_contains(const Vector& x) const {
    if (x.size() != coords.size()) return false;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!legendre_domain_contains(coords[i], x[i])) return false;
    return true;
  }
};

inline void check_dim(const LegendreFunction& f, const Vector& x, const char* op) {
  if (x.size() != f.dim())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

inline double eval(const LegendreFunction& f, const Vector& x) {
  check_dim(f, x, "eval");
  double s = 0.0;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    const double v = legendre_value(f.coords[i], x[i]);
    if (v == kInf) return kInf;
    s += v;
  }
  return s;
}

inline Vector grad(const LegendreFunction& f, const Vector& x) {
  check_dim(f, x, "grad");
  Vector g(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) g[i] = legendre_deriv(f.coords[i], x[i]);
  return g;
}

inline Vector conj_grad(const LegendreFunction& f, const Vector& xstar) {
  check_dim(f, xstar, "conj_grad");
  Vector x(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i)
    x[i] = legendre_conj_deriv(f.coords[i], xstar[i]);
  return x;
}

inline double bregman(const LegendreFunction& f, const Vector& x, const Vector& y) {
  check_dim(f, x, "bregman");
  check_dim(f, y, "bregman");
  double s = 0.0;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    const double d = bregman_scalar(f.coords[i], x[i], y[i]);
    if (d == kInf) return kInf;
    s += d;
  }
  return s;
}

}  // namespace bregman
