#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bregman/problem.hpp"
#include "bregman/solver.hpp"

namespace bregman {

// Separable blocks coupled through positive weights:
//   minimize sum_i phi_i(x_i) + sum_k psi_k(sum_i omega_ik x_i),
// psi_k = D^theta(., rho_k). Blocks are scalar; omega(k, i) = omega_ik.
struct MultiBlockProblem {
  std::size_t m = 0;  // block count
  std::size_t p = 0;  // coupling count
  DenseMatrix omega;  // p x m, strictly positive
  std::vector<double> rho;            // p, strictly positive
  std::vector<ScalarPhiSpec> phi;     // per block
  std::vector<LegendreKind> f_kinds;  // per block
  std::vector<LegendreKind> psi_kinds;  // per coupling
  std::vector<double> sigma;            // per coupling, subadditivity constants
  DenseMatrix beta_ik;                  // p x m, relative-smoothness constants
};

enum class RegressionKind { itakura_saito, kullback_leibler };

// sigma_k and beta_ik for the two prebuilt families. The Burg Bregman
// distance is scale invariant, D(w t, w u) = D(t, u), so beta_ik = 1; the
// Boltzmann-Shannon one scales linearly, D(w t, w u) = w D(t, u), so
// beta_ik = 1/omega_ik. sigma_k = 1 by subadditivity in both cases.
inline void default_constants(RegressionKind kind, const DenseMatrix& omega,
                              std::vector<double>& sigma, DenseMatrix& beta_ik) {
  for (double w : omega.data)
    if (!(w > 0.0)) throw std::invalid_argument("default_constants: nonpositive weight");
  sigma.assign(omega.rows, 1.0);
  std::vector<double> b(omega.data.size());
  for (std::size_t j = 0; j < omega.data.size(); ++j)
    b[j] = kind == RegressionKind::itakura_saito ? 1.0 : 1.0 / omega.data[j];
  beta_ik = DenseMatrix(omega.rows, omega.cols, std::move(b));
}

// Product-space problem with beta = 1 / sum_k sigma_k / beta_k,
// beta_k = min_i beta_ik.
inline CompositeProblem flatten(const MultiBlockProblem& mb) {
  if (mb.omega.rows != mb.p || mb.omega.cols != mb.m ||
      mb.beta_ik.rows != mb.p || mb.beta_ik.cols != mb.m ||
      mb.rho.size() != mb.p || mb.phi.size() != mb.m ||
      mb.f_kinds.size() != mb.m || mb.psi_kinds.size() != mb.p ||
      mb.sigma.size() != mb.p)
    throw std::invalid_argument("flatten: inconsistent multi-block dimensions");

  CompositeProblem cp;
  cp.phi = mb.phi;
  cp.f = LegendreFunction{mb.f_kinds};
  cp.L = mb.omega;
  cp.psi.reserve(mb.p);
  for (std::size_t k = 0; k < mb.p; ++k)
    cp.psi.push_back({mb.psi_kinds[k], mb.rho[k]});

  double acc = 0.0;
  for (std::size_t k = 0; k < mb.p; ++k) {
    double beta_k = kInf;
    for (std::size_t i = 0; i < mb.m; ++i) beta_k = std::min(beta_k, mb.beta_ik(k, i));
    acc += mb.sigma[k] / beta_k;
  }
  cp.beta = 1.0 / acc;
  return cp;
}

// Worst slack of D^theta(sum xi_i, sum eta_i) <= sum_i D^theta(xi_i, eta_i)
// over the supplied positive tuples (<= 0 up to round-off).
inline double subadditivity_check(
    LegendreKind kind,
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& tuples) {
  double worst = -kInf;
  for (const auto& [xs, ys] : tuples) {
    double sx = 0.0, sy = 0.0, rhs = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      rhs += bregman_scalar(kind, xs[i], ys[i]);
    }
    worst = std::max(worst, bregman_scalar(kind, sx, sy) - rhs);
  }
  return worst;
}

inline MultiBlockProblem build_regression(RegressionKind kind,
                                          const DenseMatrix& omega,
                                          std::vector<double> rho,
                                          std::vector<ScalarPhiSpec> phis) {
  for (double w : omega.data)
    if (!(w > 0.0)) throw std::invalid_argument("build_regression: nonpositive weight");
  for (double r : rho)
    if (!(r > 0.0)) throw std::invalid_argument("build_regression: nonpositive rho");
  if (phis.size() != omega.cols)
    throw std::invalid_argument("build_regression: phi count != block count");
  if (rho.size() != omega.rows)
    throw std::invalid_argument("build_regression: rho count != coupling count");

  MultiBlockProblem mb;
  mb.m = omega.cols;
  mb.p = omega.rows;
  mb.omega = omega;
  mb.rho = std::move(rho);
  mb.phi = std::move(phis);
  const LegendreKind entropy = kind == RegressionKind::itakura_saito
                                   ? LegendreKind::burg
                                   : LegendreKind::boltzmann_shannon;
  mb.f_kinds.assign(mb.m, entropy);
  mb.psi_kinds.assign(mb.p, entropy);
  default_constants(kind, mb.omega, mb.sigma, mb.beta_ik);
  return mb;
}

inline MultiBlockProblem build_is_regression(const DenseMatrix& omega,
                                             std::vector<double> rho,
                                             std::vector<ScalarPhiSpec> phis) {
  return build_regression(RegressionKind::itakura_saito, omega, std::move(rho),
                          std::move(phis));
}

inline MultiBlockProblem build_kl_regression(const DenseMatrix& omega,
                                             std::vector<double> rho,
                                             std::vector<ScalarPhiSpec> phis) {
  return build_regression(RegressionKind::kullback_leibler, omega, std::move(rho),
                          std::move(phis));
}

// Explicit block-resolved step; algebraically and arithmetically the same as
// forward_backward_step on the flattened problem (the prox factors
// coordinatewise).
inline Vector multiblock_step(const MultiBlockProblem& mb, double mu, double gamma,
                              const Vector& x) {
  Vector y(mb.p, 0.0);
  for (std::size_t k = 0; k < mb.p; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < mb.m; ++i) s += mb.omega(k, i) * x[i];
    y[k] = s;
  }
  Vector g(mb.p);
  for (std::size_t k = 0; k < mb.p; ++k) {
    if (!legendre_interior(mb.psi_kinds[k]).contains(y[k]))
      throw std::domain_error("multiblock_step: coupling " + std::to_string(k) +
                              " left int dom psi");
    g[k] = legendre_deriv(mb.psi_kinds[k], y[k]) -
           legendre_deriv(mb.psi_kinds[k], mb.rho[k]);
  }
  Vector out(mb.m);
  for (std::size_t i = 0; i < mb.m; ++i) {
    double adj = 0.0;
    for (std::size_t k = 0; k < mb.p; ++k) adj += mb.omega(k, i) * g[k];
    const double u = mu * legendre_deriv(mb.f_kinds[i], x[i]) - gamma * adj;
    out[i] = prox_scalar(mb.f_kinds[i], mb.phi[i], gamma / mu, u / mu);
  }
  return out;
}

// Runs the flattened composite problem; by the product-space prox identity
// the iterates coincide with the block iteration, so the trace is block
// resolved (one coordinate per block).
inline std::pair<SolveReport, IterateTrace> mb_solve(const MultiBlockProblem& mb,
                                                     const StepSchedule& s,
                                                     const Vector& x0,
                                                     const StopRule& stop,
                                                     const Vector* x_ref = nullptr) {
  return solve(flatten(mb), s, x0, stop, x_ref);
}

}  // namespace bregman
