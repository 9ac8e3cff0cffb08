#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bregman/kinds.hpp"
#include "bregman/lambert_w.hpp"
#include "bregman/legendre.hpp"
#include "bregman/phi.hpp"
#include "bregman/root_find.hpp"

namespace bregman {

// ---- closed-form catalog -------------------------------------------------
//
// Every formula below was re-derived from the stationarity condition
// theta'(eta) + gamma*phi'(eta) = xi, which is the ground truth the tests
// check against. Two entries differ from commonly printed forms:
//   * boltzmann_shannon x linear_entropy: eta = exp((xi+gamma(omega-1))/(gamma+1))
//   * burg x burg:                        eta = -(1+gamma)/xi
// The Fermi-Dirac rows solve a quadratic only at gamma = 1; other gammas go
// through the numeric fallback.

struct ClosedFormEntry {
  LegendreKind legendre;
  PhiKind phi;
  std::string formula;
  std::string domain;
  bool unit_gamma_only;
};

inline const std::vector<ClosedFormEntry>& prox_closed_form_table() {
  static const std::vector<ClosedFormEntry> table = {
      {LegendreKind::boltzmann_shannon, PhiKind::linear_entropy,
       "eta = exp((xi + gamma*(omega-1))/(gamma+1))", "xi in R", false},
      {LegendreKind::boltzmann_shannon, PhiKind::power,
       "p = 1: eta = exp(xi - gamma); p > 1: eta = "
       "(W(gamma*(p-1)*exp((p-1)*xi))/(gamma*(p-1)))^(1/(p-1))",
       "xi in R", false},
      {LegendreKind::boltzmann_shannon, PhiKind::neg_power,
       "eta = (W(gamma*(p+1)*exp(-(p+1)*xi))/(gamma*(p+1)))^(-1/(p+1))",
       "xi in R", false},
      {LegendreKind::boltzmann_shannon, PhiKind::neg_root,
       "eta = (W(gamma*(1-p)*exp((p-1)*xi))/(gamma*(1-p)))^(1/(p-1))",
       "xi in R", false},
      {LegendreKind::fermi_dirac, PhiKind::linear_entropy,
       "eta = 2/(1 + sqrt(1 + 4/c)), c = exp(xi + omega - 1)", "xi in R", true},
      {LegendreKind::fermi_dirac, PhiKind::one_minus_log,
       "eta = 1 - 2/(1 + sqrt(1 + 4/d)), d = exp(-xi)", "xi in R", true},
      {LegendreKind::hellinger, PhiKind::self_hellinger,
       "eta = xi/sqrt((gamma+1)^2 + xi^2)", "xi in R", false},
      {LegendreKind::burg, PhiKind::burg, "eta = -(1+gamma)/xi", "xi < 0", false},
      {LegendreKind::burg, PhiKind::abs_linear, "eta = 1/(gamma*alpha - xi)",
       "xi <= gamma*alpha", false},
      {LegendreKind::half_square, PhiKind::zero, "eta = xi", "xi in R", false},
  };
  return table;
}

inline const ClosedFormEntry* closed_form_lookup(LegendreKind f, PhiKind phi) {
  for (const auto& e : prox_closed_form_table())
    if (e.legendre == f && e.phi == phi) return &e;
  return nullptr;
}

// phi = 0 has the closed form eta = (theta*)'(xi) for every Legendre kind.
inline bool closed_form_applicable(LegendreKind f, const ScalarPhiSpec& phi,
                                   double gamma) {
  if (phi.kind == PhiKind::zero) return true;
  const ClosedFormEntry* e = closed_form_lookup(f, phi.kind);
  if (!e) return false;
  return !e->unit_gamma_only || gamma == 1.0;
}

// ---- numeric separable fallback ------------------------------------------

namespace detail {

// Expands a bracket for g(t) = xi inside the open interval (a, b), starting
// from a center point. g is strictly increasing.
inline Bracket expand_bracket(const std::function<double(double)>& g, double xi,
                              Interval dom, double center) {
  double c = center;
  if (!dom.contains(c)) {
    if (std::isfinite(dom.lo) && std::isfinite(dom.hi))
      c = 0.5 * (dom.lo + dom.hi);
    else if (std::isfinite(dom.lo))
      c = dom.lo + 1.0;
    else if (std::isfinite(dom.hi))
      c = dom.hi - 1.0;
    else
      c = 0.0;
  }
  double lo = c, hi = c;
  double glo = g(lo), ghi = g(hi);
  double step = std::max(1.0, std::abs(c));
  for (int j = 1; j <= 400 && glo > xi; ++j) {
    lo = std::isfinite(dom.lo) ? dom.lo + (lo - dom.lo) / 2.0 : lo - step;
    if (!std::isfinite(dom.lo) && step < 1e150) step *= 2.0;
    glo = g(lo);
  }
  step = std::max(1.0, std::abs(c));
  for (int j = 1; j <= 400 && ghi < xi; ++j) {
    hi = std::isfinite(dom.hi) ? dom.hi - (dom.hi - hi) / 2.0 : hi + step;
    if (!std::isfinite(dom.hi) && step < 1e150) step *= 2.0;
    ghi = g(hi);
  }
  if (glo > xi || ghi < xi)
    throw bracket_error("prox_numeric_scalar: no bracket in (" +
                        std::to_string(dom.lo) + ", " + std::to_string(dom.hi) +
                        "), attempted [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
  return {lo, hi};
}

inline Interval intersect(Interval a, Interval b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

}  // namespace detail

// Solves theta'(eta) + gamma*phi'(eta) = xi on int dom theta intersected with
// the differentiability interval of phi. Handles the abs_linear kink when 0
// is an interior point of theta.
inline double prox_numeric_scalar(LegendreKind f, const ScalarPhiSpec& phi,
                                  double gamma, double xi, double tol = 1e-12) {
  if (gamma <= 0.0) throw std::invalid_argument("prox: gamma must be positive");
  Interval dom = detail::intersect(legendre_interior(f), phi_interior(phi));
  if (!(dom.lo < dom.hi))
    throw std::domain_error("prox_numeric_scalar: empty domain for pairing " +
                            to_string(f) + "/" + to_string(phi.kind));

  if (phi_has_kink_at_zero(phi) && dom.contains(0.0)) {
    const double t0 = legendre_deriv(f, 0.0);
    if (xi >= t0 - gamma * phi.alpha && xi <= t0 + gamma * phi.alpha) return 0.0;
    // solution lies strictly on one side of the kink
    if (xi > t0) dom.lo = 0.0; else dom.hi = 0.0;
  }

  auto g = [&](double t) { return legendre_deriv(f, t) + gamma * phi_deriv(phi, t); };
  auto dg = [&](double t) {
    return legendre_second_deriv(f, t) + gamma * phi_second_deriv(phi, t);
  };

  // The phi = 0 solution is a natural bracket center.
  double center;
  if (legendre_conj_interior(f).contains(xi))
    center = legendre_conj_deriv(f, xi);
  else
    center = std::numeric_limits<double>::quiet_NaN();

  Bracket br = detail::expand_bracket(g, xi, dom, center);
  if (br.lo == br.hi) return br.lo;
  return solve_monotone_scalar(g, xi, br, tol, dg);
}

// ---- scalar prox ---------------------------------------------------------

inline double prox_scalar(LegendreKind f, const ScalarPhiSpec& phi, double gamma,
                          double xi) {
  if (gamma <= 0.0) throw std::invalid_argument("prox: gamma must be positive");

  if (phi.kind == PhiKind::zero) {
    if (!legendre_conj_interior(f).contains(xi))
      throw std::domain_error("prox: " + to_string(f) +
                              "/zero needs xi in int dom theta*, got " +
                              std::to_string(xi));
    return legendre_conj_deriv(f, xi);
  }

  if (!closed_form_applicable(f, phi, gamma))
    return prox_numeric_scalar(f, phi, gamma, xi);

  switch (f) {
    case LegendreKind::boltzmann_shannon:
      switch (phi.kind) {
        case PhiKind::linear_entropy:
          return std::exp((xi + gamma * (phi.omega - 1.0)) / (gamma + 1.0));
        case PhiKind::power: {
          if (phi.p == 1.0) return std::exp(xi - gamma);
          const double a = gamma * (phi.p - 1.0);
          const double e = (phi.p - 1.0) * xi;
          double w;
          if (e > 690.0) {
            // asymptotic W for huge arguments, refined by lambert_w0's range
            const double l1 = std::log(a) + e;
            const double l2 = std::log(l1);
            w = l1 - l2 + l2 / l1;
          } else {
            w = lambert_w0(a * std::exp(e));
          }
          return std::pow(w / a, 1.0 / (phi.p - 1.0));
        }
        case PhiKind::neg_power: {
          const double a = gamma * (phi.p + 1.0);
          const double w = lambert_w0(a * std::exp(-(phi.p + 1.0) * xi));
          return std::pow(w / a, -1.0 / (phi.p + 1.0));
        }
        case PhiKind::neg_root: {
          const double a = gamma * (1.0 - phi.p);
          const double w = lambert_w0(a * std::exp((phi.p - 1.0) * xi));
          return std::pow(w / a, 1.0 / (phi.p - 1.0));
        }
        default: break;
      }
      break;
    case LegendreKind::fermi_dirac:
      switch (phi.kind) {
        case PhiKind::linear_entropy: {
          // positive root of eta^2 = (1-eta)*c, c = exp(xi+omega-1)
          const double c = std::exp(xi + phi.omega - 1.0);
          return 2.0 / (1.0 + std::sqrt(1.0 + 4.0 / c));
        }
        case PhiKind::one_minus_log: {
          // root of eta = (1-eta)^2 * exp(xi) rearranged for stability
          const double d = std::exp(-xi);
          return 1.0 - 2.0 / (1.0 + std::sqrt(1.0 + 4.0 / d));
        }
        default: break;
      }
      break;
    case LegendreKind::hellinger:
      if (phi.kind == PhiKind::self_hellinger)
        return xi / std::sqrt((gamma + 1.0) * (gamma + 1.0) + xi * xi);
      break;
    case LegendreKind::burg:
      if (phi.kind == PhiKind::burg) {
        if (xi >= 0.0)
          throw std::domain_error("prox: burg/burg needs xi < 0, got " +
                                  std::to_string(xi));
        return -(1.0 + gamma) / xi;
      }
      if (phi.kind == PhiKind::abs_linear) {
        if (xi >= gamma * phi.alpha)
          throw std::domain_error("prox: burg/abs_linear needs xi < gamma*alpha, got " +
                                  std::to_string(xi));
        return 1.0 / (gamma * phi.alpha - xi);
      }
      break;
    case LegendreKind::half_square:
      break;
  }
  return prox_numeric_scalar(f, phi, gamma, xi);
}

// ---- vector operator -----------------------------------------------------

// Coordinatewise Bregman proximity operator: the vector prox of a separable
// pair factors into the tuple of scalar proxes.
struct ProxOperator {
  std::vector<LegendreKind> legendre;
  std::vector<ScalarPhiSpec> phi;
  double gamma = 1.0;

  std::size_t dim() const { return legendre.size(); }
};

inline Vector prox_apply(const ProxOperator& op, const Vector& xstar) {
  if (xstar.size() != op.dim() || op.phi.size() != op.dim())
    throw std::invalid_argument("prox_apply: dimension mismatch");
  Vector out(op.dim());
  for (std::size_t i = 0; i < op.dim(); ++i)
    out[i] = prox_scalar(op.legendre[i], op.phi[i], op.gamma, xstar[i]);
  return out;
}

}  // namespace bregman
