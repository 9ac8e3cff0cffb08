#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "bregman/problem.hpp"
#include "bregman/prox.hpp"
#include "bregman/schedule.hpp"

namespace bregman {

enum class StopReason { tolerance_met, max_iterations, domain_failure };

inline std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::tolerance_met: return "tolerance met";
    case StopReason::max_iterations: return "max iterations";
    case StopReason::domain_failure: return "domain failure";
  }
  return "?";
}

struct SolveReport {
  Vector final_point;
  std::size_t iterations = 0;
  StopReason stop_reason = StopReason::max_iterations;
  double final_objective = 0.0;
  std::string diagnostic;  // populated on domain failure
};

struct TraceRow {
  std::size_t n = 0;
  Vector x;
  double gamma = 0.0;
  double mu = 1.0;
  double eta = 0.0;
  double objective = 0.0;
  double displacement = 0.0;                                // 0 for the x0 row
  double bregman_ref = std::numeric_limits<double>::quiet_NaN();  // NaN if no ref
};

struct IterateTrace {
  std::vector<TraceRow> rows;
  bool has_ref = false;
};

struct StopRule {
  double tol = 1e-9;      // on step displacement
  std::size_t max_iter = 1000;
};

struct schedule_error : std::runtime_error {
  std::vector<ScheduleViolation> violations;
  explicit schedule_error(std::vector<ScheduleViolation> v)
      : std::runtime_error("invalid step schedule (" + std::to_string(v.size()) +
                           " violations)"),
        violations(std::move(v)) {}
};

inline double l2_dist(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// D^{g}(x, y) with g = mu*f - gamma*(psi o L).
inline double bregman_g(const CompositeProblem& p, double mu, double gamma,
                        const Vector& x, const Vector& y) {
  const double df = bregman(p.f, x, y);
  if (df == kInf) return kInf;
  const double dpsi = bregman_psi_of_L(p, x, y);
  if (dpsi == kInf) return kInf;
  return mu * df - gamma * dpsi;
}

// One mirror step: Prox^{mu f}_{gamma phi}(mu grad f(x) - gamma L* grad psi(Lx)).
// The scaled prox reduces to the unit one via Prox^{mu f}_{gamma phi}(u) =
// Prox^{f}_{(gamma/mu) phi}(u/mu).
inline Vector forward_backward_step(const CompositeProblem& p, double mu,
                                    double gamma, const Vector& x) {
  if (!p.f.interior_contains(x))
    throw std::domain_error("forward_backward_step: point not in int dom f");
  const Vector y = p.L.apply(x);
  const Vector gpsi = psi_grad(p, y);  // throws if Lx leaves int dom psi
  const Vector adj = p.L.apply_adjoint(gpsi);

  Vector out(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double u = mu * legendre_deriv(p.f.coords[i], x[i]) - gamma * adj[i];
    out[i] = prox_scalar(p.f.coords[i], p.phi[i], gamma / mu, u / mu);
  }
  return out;
}

inline std::pair<SolveReport, IterateTrace> solve(const CompositeProblem& p,
                                                  const StepSchedule& s,
                                                  const Vector& x0,
                                                  const StopRule& stop,
                                                  const Vector* x_ref = nullptr) {
  auto violations = validate_schedule(s, stop.max_iter);
  if (!violations.empty()) throw schedule_error(std::move(violations));
  if (!p.f.interior_contains(x0))
    throw std::domain_error("solve: x0 not in int dom f");

  IterateTrace trace;
  trace.has_ref = x_ref != nullptr;
  auto push_row = [&](std::size_t n, const Vector& x, double disp) {
    TraceRow row;
    row.n = n;
    row.x = x;
    row.gamma = s.gamma(n);
    row.mu = s.mu(n);
    row.eta = s.eta(n);
    row.objective = objective(p, x);
    row.displacement = disp;
    if (x_ref) row.bregman_ref = bregman_g(p, s.mu(n), s.gamma(n), *x_ref, x);
    trace.rows.push_back(std::move(row));
  };

  Vector x = x0;
  push_row(0, x, 0.0);

  SolveReport report;
  report.stop_reason = StopReason::max_iterations;
  std::size_t n = 0;
  for (; n < stop.max_iter; ++n) {
    Vector next;
    try {
      next = forward_backward_step(p, s.mu(n), s.gamma(n), x);
    } catch (const std::domain_error& e) {
      report.stop_reason = StopReason::domain_failure;
      report.diagnostic = "iteration " + std::to_string(n) + ": " + e.what();
      break;
    }
    const double disp = l2_dist(next, x);
    x = std::move(next);
    push_row(n + 1, x, disp);
    if (disp <= stop.tol) {
      report.stop_reason = StopReason::tolerance_met;
      ++n;
      break;
    }
  }
  report.final_point = x;
  report.iterations = n;
  report.final_objective = objective(p, x);
  return {std::move(report), std::move(trace)};
}

// Worst slacks of the two monotonicity diagnostics along a trace:
//  (a) objective nonincrease: max of Phi(x_{n+1}) - Phi(x_n);
//  (b) stationary quasi-Bregman monotonicity with omega = 1 + 1/eps:
//      max of D^{g_{n+1}}(ref, x_{n+1}) - (1+omega*eta_n) D^{g_n}(ref, x_n).
struct TraceDiagnostics {
  double worst_objective_slack = -kInf;
  double worst_quasi_bregman_slack = -kInf;
};

inline TraceDiagnostics check_trace_inequalities(const CompositeProblem& p,
                                                 const StepSchedule& s,
                                                 const IterateTrace& trace,
                                                 const Vector& x_ref) {
  if (!p.f.interior_contains(x_ref) || phi_total(p, x_ref) == kInf)
    throw std::domain_error("check_trace_inequalities: x_ref outside dom Phi "
                            "or int dom f");
  TraceDiagnostics d;
  const double omega = 1.0 + 1.0 / s.eps;
  for (std::size_t r = 0; r + 1 < trace.rows.size(); ++r) {
    const TraceRow& a = trace.rows[r];
    const TraceRow& b = trace.rows[r + 1];
    d.worst_objective_slack =
        std::max(d.worst_objective_slack, b.objective - a.objective);
    const double da = bregman_g(p, s.mu(a.n), s.gamma(a.n), x_ref, a.x);
    const double db = bregman_g(p, s.mu(b.n), s.gamma(b.n), x_ref, b.x);
    d.worst_quasi_bregman_slack = std::max(
        d.worst_quasi_bregman_slack, db - (1.0 + omega * s.eta(a.n)) * da);
  }
  return d;
}

}  // namespace bregman
