#pragma once

#include <cmath>
#include <stdexcept>

#include "bregman/kinds.hpp"
#include "bregman/legendre.hpp"

namespace bregman {

inline double phi_value(const ScalarPhiSpec& s, double t) {
  switch (s.kind) {
    case PhiKind::zero:
      return 0.0;
    case PhiKind::linear_entropy:
      if (t < 0.0) return kInf;
      return t == 0.0 ? 0.0 : t * std::log(t) - s.omega * t;
    case PhiKind::power:
      if (t < 0.0) return kInf;
      return std::pow(t, s.p) / s.p;
    case PhiKind::neg_power:
      return t > 0.0 ? std::pow(t, -s.p) / s.p : kInf;
    case PhiKind::neg_root:
      if (t < 0.0) return kInf;
      return -std::pow(t, s.p) / s.p;
    case PhiKind::abs_linear:
      return s.alpha * std::abs(t);
    case PhiKind::mirror_entropy:
      if (t > 1.0) return kInf;
      return t == 1.0 ? 0.0 : (1.0 - t) * std::log(1.0 - t) - s.omega * (1.0 - t);
    case PhiKind::one_minus_log:
      if (t > 1.0) return kInf;
      return t == 1.0 ? 1.0 : (1.0 - t) * std::log(1.0 - t) + t;
    case PhiKind::self_hellinger:
      return legendre_value(LegendreKind::hellinger, t);
    case PhiKind::burg:
      return t > 0.0 ? -std::log(t) : kInf;
  }
  return kInf;
}

// Open interval on which phi is differentiable. abs_linear additionally has
// a kink at 0 inside this interval; see phi_has_kink_at_zero.
inline Interval phi_interior(const ScalarPhiSpec& s) {
  switch (s.kind) {
    case PhiKind::zero: return {-kInf, kInf};
    case PhiKind::linear_entropy: return {0.0, kInf};
    case PhiKind::power: return {0.0, kInf};
    case PhiKind::neg_power: return {0.0, kInf};
    case PhiKind::neg_root: return {0.0, kInf};
    case PhiKind::abs_linear: return {-kInf, kInf};
    case PhiKind::mirror_entropy: return {-kInf, 1.0};
    case PhiKind::one_minus_log: return {-kInf, 1.0};
    case PhiKind::self_hellinger: return {-1.0, 1.0};
    case PhiKind::burg: return {0.0, kInf};
  }
  return {0, 0};
}

inline bool phi_has_kink_at_zero(const ScalarPhiSpec& s) {
  return s.kind == PhiKind::abs_linear;
}

inline double phi_deriv(const ScalarPhiSpec& s, double t) {
  switch (s.kind) {
    case PhiKind::zero: return 0.0;
    case PhiKind::linear_entropy: return std::log(t) + 1.0 - s.omega;
    case PhiKind::power: return std::pow(t, s.p - 1.0);
    case PhiKind::neg_power: return -std::pow(t, -s.p - 1.0);
    case PhiKind::neg_root: return -std::pow(t, s.p - 1.0);
    case PhiKind::abs_linear:
      if (t == 0.0)
        throw std::domain_error("phi_deriv: abs_linear is nonsmooth at 0");
      return t > 0.0 ? s.alpha : -s.alpha;
    case PhiKind::mirror_entropy: return -std::log(1.0 - t) - 1.0 + s.omega;
    case PhiKind::one_minus_log: return -std::log(1.0 - t);
    case PhiKind::self_hellinger: return legendre_deriv(LegendreKind::hellinger, t);
    case PhiKind::burg: return -1.0 / t;
  }
  return 0.0;
}

inline double phi_second_deriv(const ScalarPhiSpec& s, double t) {
  switch (s.kind) {
    case PhiKind::zero: return 0.0;
    case PhiKind::linear_entropy: return 1.0 / t;
    case PhiKind::power: return (s.p - 1.0) * std::pow(t, s.p - 2.0);
    case PhiKind::neg_power: return (s.p + 1.0) * std::pow(t, -s.p - 2.0);
    case PhiKind::neg_root: return (1.0 - s.p) * std::pow(t, s.p - 2.0);
    case PhiKind::abs_linear: return 0.0;
    case PhiKind::mirror_entropy: return 1.0 / (1.0 - t);
    case PhiKind::one_minus_log: return 1.0 / (1.0 - t);
    case PhiKind::self_hellinger:
      return legendre_second_deriv(LegendreKind::hellinger, t);
    case PhiKind::burg: return 1.0 / (t * t);
  }
  return 0.0;
}

// Subgradient interval of phi at an interior point (a single value except at
// the abs_linear kink).
struct SubgradInterval {
  double lo;
  double hi;
};

inline SubgradInterval phi_subgrad(const ScalarPhiSpec& s, double t) {
  if (phi_has_kink_at_zero(s) && t == 0.0) return {-s.alpha, s.alpha};
  const double d = phi_deriv(s, t);
  return {d, d};
}

}  // namespace bregman
