#pragma once

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "bregman/kinds.hpp"
#include "bregman/legendre.hpp"
#include "bregman/matrix.hpp"
#include "bregman/phi.hpp"

namespace bregman {

// Smooth coupling term psi_k = D^theta(., rho), the Bregman divergence of an
// entropy kernel to a fixed positive reference.
struct DivergenceTerm {
  LegendreKind kind;
  double rho;
};

// minimize phi(x) + psi(Lx) with f the mirror generator and beta the
// relative-smoothness constant (f dominates beta * psi o L).
struct CompositeProblem {
  std::vector<ScalarPhiSpec> phi;   // separable, one spec per coordinate
  LegendreFunction f;               // one Legendre kind per coordinate
  DenseMatrix L;                    // p x m
  std::vector<DivergenceTerm> psi;  // one divergence per output coordinate
  double beta = 1.0;

  std::size_t dim() const { return f.dim(); }
};

inline double psi_value(const CompositeProblem& p, const Vector& y) {
  if (y.size() != p.psi.size())
    throw std::invalid_argument("psi_value: dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    const double d = bregman_scalar(p.psi[k].kind, y[k], p.psi[k].rho);
    if (d == kInf) return kInf;
    s += d;
  }
  return s;
}

inline bool psi_interior_contains(const CompositeProblem& p, const Vector& y) {
  for (std::size_t k = 0; k < y.size(); ++k)
    if (!legendre_interior(p.psi[k].kind).contains(y[k])) return false;
  return true;
}

inline Vector psi_grad(const CompositeProblem& p, const Vector& y) {
  if (y.size() != p.psi.size())
    throw std::invalid_argument("psi_grad: dimension mismatch");
  Vector g(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (!legendre_interior(p.psi[k].kind).contains(y[k]))
      throw std::domain_error("psi_grad: point outside int dom psi at coordinate " +
                              std::to_string(k));
    g[k] = legendre_deriv(p.psi[k].kind, y[k]) -
           legendre_deriv(p.psi[k].kind, p.psi[k].rho);
  }
  return g;
}

inline double phi_total(const CompositeProblem& p, const Vector& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = phi_value(p.phi[i], x[i]);
    if (v == kInf) return kInf;
    s += v;
  }
  return s;
}

// Phi(x) = phi(x) + psi(Lx); +inf outside dom Phi.
inline double objective(const CompositeProblem& p, const Vector& x) {
  if (x.size() != p.dim()) throw std::invalid_argument("objective: dimension");
  const double pv = phi_total(p, x);
  if (pv == kInf) return kInf;
  const Vector y = p.L.apply(x);
  const double sv = psi_value(p, y);
  if (sv == kInf) return kInf;
  return pv + sv;
}

// D^{psi o L}(x, z) = D^psi(Lx, Lz).
inline double bregman_psi_of_L(const CompositeProblem& p, const Vector& x,
                               const Vector& z) {
  const Vector yx = p.L.apply(x);
  const Vector yz = p.L.apply(z);
  double s = 0.0;
  for (std::size_t k = 0; k < yx.size(); ++k) {
    const double d = bregman_scalar(p.psi[k].kind, yx[k], yz[k]);
    if (d == kInf) return kInf;
    s += d;
  }
  return s;
}

// Sampled check of f >= beta * psi o L: draws random interior pairs and
// reports the worst violation of beta*D^{psi o L} - D^f (<= 0 when the
// constant is admissible on the sample). Cannot certify the inequality.
inline double sampled_beta_slack(const CompositeProblem& p, int samples = 1000,
                                 unsigned seed = 1234) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  auto draw_interior = [&](std::size_t i) {
    const Interval iv = legendre_interior(p.f.coords[i]);
    if (std::isfinite(iv.lo) && std::isfinite(iv.hi))
      return iv.lo + (iv.hi - iv.lo) * unit(rng);
    if (std::isfinite(iv.lo)) return iv.lo + 0.1 + 4.0 * unit(rng);
    if (std::isfinite(iv.hi)) return iv.hi - 0.1 - 4.0 * unit(rng);
    return 8.0 * unit(rng) - 4.0;
  };
  double worst = -kInf;
  for (int s = 0; s < samples; ++s) {
    Vector x(p.dim()), z(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
      x[i] = draw_interior(i);
      z[i] = draw_interior(i);
    }
    const double df = bregman(p.f, x, z);
    const double dpsi = bregman_psi_of_L(p, x, z);
    if (df == kInf || dpsi == kInf) continue;
    worst = std::max(worst, p.beta * dpsi - df);
  }
  return worst;
}

}  // namespace bregman
