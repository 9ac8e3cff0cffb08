// Batch front end: load a problem file, validate the schedule, run the
// solver, emit trace and report.
//
// Exit codes: 0 solved to tolerance, 1 parse error / unknown kind,
// 2 invalid schedule, 3 domain failure, 4 max iterations reached.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bregman/bregman.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitSchedule = 2;
constexpr int kExitDomain = 3;
constexpr int kExitMaxIter = 4;

void print_vector(const bregman::Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    std::printf("%s%s", i ? " " : "", bregman::format_double(v[i]).c_str());
  std::printf("\n");
}

int run_solve(const std::string& path, const std::string& trace_path,
              long max_iter_override, double tol_override,
              const std::vector<double>& ref) {
  bregman::ProblemConfig cfg;
  try {
    std::ifstream in(path);
    if (!in) {
      std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
      return kExitParse;
    }
    cfg = bregman::parse_problem_file(in);
  } catch (const bregman::parse_error& e) {
    std::fprintf(stderr, "parse error in %s: %s\n", path.c_str(), e.what());
    return kExitParse;
  }

  bregman::BuiltProblem built;
  try {
    built = bregman::build_from_config(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  }
  if (max_iter_override >= 0) built.stop.max_iter = std::size_t(max_iter_override);
  if (tol_override >= 0) built.stop.tol = tol_override;

  const bregman::Vector* x_ref = nullptr;
  if (!ref.empty()) {
    if (ref.size() != built.problem.dim()) {
      std::fprintf(stderr, "error: --ref needs %zu values\n", built.problem.dim());
      return kExitParse;
    }
    x_ref = &ref;
  }

  auto violations = bregman::validate_schedule(built.schedule, built.stop.max_iter);
  if (!violations.empty()) {
    std::fprintf(stderr, "invalid schedule (%zu violations):\n", violations.size());
    for (const auto& v : violations)
      std::fprintf(stderr, "  n=%zu: %s\n", v.index, v.inequality.c_str());
    return kExitSchedule;
  }
  if (!built.problem.f.interior_contains(built.x0)) {
    std::fprintf(stderr, "domain error: x0 is not in int dom f\n");
    return kExitDomain;
  }

  auto [report, trace] =
      bregman::solve(built.problem, built.schedule, built.x0, built.stop, x_ref);

  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", trace_path.c_str());
      return kExitParse;
    }
    bregman::write_trace_csv(out, trace, built.multiblock);
  }

  std::printf("final point: ");
  print_vector(report.final_point);
  std::printf("objective: %s\n", bregman::format_double(report.final_objective).c_str());
  std::printf("iterations: %zu\n", report.iterations);
  std::printf("stop reason: %s\n", bregman::to_string(report.stop_reason).c_str());
  if (!report.diagnostic.empty())
    std::printf("diagnostic: %s\n", report.diagnostic.c_str());

  switch (report.stop_reason) {
    case bregman::StopReason::tolerance_met: return kExitOk;
    case bregman::StopReason::max_iterations: return kExitMaxIter;
    case bregman::StopReason::domain_failure: return kExitDomain;
  }
  return kExitOk;
}

int run_prox(const std::string& legendre, const std::string& phi_kind, double gamma,
             double xi, double omega, double p, double alpha) {
  bregman::LegendreKind lk;
  bregman::ScalarPhiSpec spec;
  try {
    lk = bregman::legendre_kind_from_string(legendre);
    const bregman::PhiKind pk = bregman::phi_kind_from_string(phi_kind);
    using S = bregman::ScalarPhiSpec;
    switch (pk) {
      case bregman::PhiKind::zero: spec = S::zero(); break;
      case bregman::PhiKind::linear_entropy: spec = S::linear_entropy(omega); break;
      case bregman::PhiKind::power: spec = S::power(p); break;
      case bregman::PhiKind::neg_power: spec = S::neg_power(p); break;
      case bregman::PhiKind::neg_root: spec = S::neg_root(p); break;
      case bregman::PhiKind::abs_linear: spec = S::abs_linear(alpha); break;
      case bregman::PhiKind::mirror_entropy: spec = S::mirror_entropy(omega); break;
      case bregman::PhiKind::one_minus_log: spec = S::one_minus_log(); break;
      case bregman::PhiKind::self_hellinger: spec = S::self_hellinger(); break;
      case bregman::PhiKind::burg: spec = S::burg(); break;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  }

  double eta;
  try {
    eta = bregman::prox_scalar(lk, spec, gamma, xi);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return kExitDomain;
  }
  const double residual = bregman::oracle::prox_residual(lk, spec, gamma, xi, eta);
  std::printf("eta: %s\n", bregman::format_double(eta).c_str());
  std::printf("residual: %s\n", bregman::format_double(residual).c_str());
  return residual <= 1e-9 ? kExitOk : kExitDomain;
}

int run_lambertw(double x) {
  double w;
  try {
    w = bregman::lambert_w0(x);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return kExitDomain;
  }
  std::printf("W: %s\n", bregman::format_double(w).c_str());
  std::printf("residual: %s\n",
              bregman::format_double(std::abs(w * std::exp(w) - x)).c_str());
  return kExitOk;
}

int run_validate(double beta, double eps, bool eps_given, double alpha,
                 const std::vector<double>& gammas, const std::vector<double>& etas,
                 const std::vector<double>& mus, std::size_t horizon) {
  bregman::StepSchedule s;
  s.beta = beta;
  s.eps = eps_given ? eps : 0.05 * beta / (beta + 1.0);
  s.alpha = alpha;
  s.gammas = gammas;
  s.etas = etas;
  s.mus = mus;
  auto violations = bregman::validate_schedule(s, horizon);
  if (violations.empty()) {
    std::printf("ok\n");
    return kExitOk;
  }
  std::printf("%zu violations:\n", violations.size());
  for (const auto& v : violations)
    std::printf("  n=%zu: %s\n", v.index, v.inequality.c_str());
  return kExitSchedule;
}

int run_oracle(const std::string& path, const std::vector<double>& box_vals,
               int levels, int points) {
  bregman::ProblemConfig cfg;
  bregman::BuiltProblem built;
  try {
    std::ifstream in(path);
    if (!in) {
      std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
      return kExitParse;
    }
    cfg = bregman::parse_problem_file(in);
    built = bregman::build_from_config(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  }
  const std::size_t m = built.problem.dim();
  if (box_vals.size() != 2 * m) {
    std::fprintf(stderr, "error: --box needs %zu values (lo hi per coordinate)\n",
                 2 * m);
    return kExitParse;
  }
  bregman::oracle::Box box;
  for (std::size_t i = 0; i < m; ++i) {
    box.lo.push_back(box_vals[2 * i]);
    box.hi.push_back(box_vals[2 * i + 1]);
  }
  try {
    auto res = bregman::oracle::grid_refine_minimize(
        [&](const std::vector<double>& v) { return objective(built.problem, v); },
        box, levels, points);
    std::printf("point: ");
    print_vector(res.point);
    std::printf("value: %s\n", bregman::format_double(res.value).c_str());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bregman forward-backward solver toolkit"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "run the solver on a problem file");
  std::string problem_path, trace_path;
  long max_iter = -1;
  double tol = -1;
  std::vector<double> ref;
  solve_cmd->add_option("problem", problem_path, "problem file")->required();
  solve_cmd->add_option("--trace", trace_path, "write the iterate trace CSV here");
  solve_cmd->add_option("--max-iter", max_iter, "override max iterations");
  solve_cmd->add_option("--tol", tol, "override displacement tolerance");
  solve_cmd->add_option("--ref", ref, "reference point for the bregman_ref column");

  // prox
  auto* prox_cmd = app.add_subcommand("prox", "evaluate one scalar Bregman prox");
  std::string legendre_kind, phi_kind;
  double gamma = 1.0, xi = 0.0, omega = 0.0, pparam = 0.0, alpha = 0.0;
  prox_cmd->add_option("legendre", legendre_kind, "legendre kind")->required();
  prox_cmd->add_option("phi", phi_kind, "phi kind")->required();
  prox_cmd->add_option("--gamma", gamma, "prox scaling")->required();
  prox_cmd->add_option("--xi", xi, "input point")->required();
  prox_cmd->add_option("--omega", omega, "omega parameter (entropy kinds)");
  prox_cmd->add_option("--p", pparam, "exponent parameter (power kinds)");
  prox_cmd->add_option("--alpha", alpha, "alpha parameter (abs_linear)");

  // lambertw
  auto* lw_cmd = app.add_subcommand("lambertw", "principal-branch Lambert W");
  double lw_x = 0.0;
  lw_cmd->add_option("x", lw_x, "argument, >= -1/e")->required();

  // validate-schedule
  auto* val_cmd = app.add_subcommand("validate-schedule", "check step-size rules");
  double vbeta = 1.0, veps = 0.0, valpha = 1.0;
  std::vector<double> vgammas, vetas, vmus;
  std::size_t horizon = 100;
  val_cmd->add_option("--beta", vbeta, "relative-smoothness constant")->required();
  auto* eps_opt = val_cmd->add_option("--eps", veps, "epsilon margin");
  val_cmd->add_option("--alpha", valpha, "scaling lower bound (mu case)");
  val_cmd->add_option("--gamma", vgammas, "gamma sequence")->required();
  val_cmd->add_option("--eta", vetas, "eta sequence");
  val_cmd->add_option("--mu", vmus, "mu sequence");
  val_cmd->add_option("--horizon", horizon, "indices to check");

  // oracle (debugging aid, hidden from help)
  auto* oracle_cmd = app.add_subcommand("oracle", "grid-refinement reference minimizer");
  oracle_cmd->group("");
  std::string oracle_path;
  std::vector<double> box_vals;
  int levels = 12, points = 11;
  oracle_cmd->add_option("problem", oracle_path, "problem file")->required();
  oracle_cmd->add_option("--box", box_vals, "lo hi per coordinate")->required();
  oracle_cmd->add_option("--levels", levels, "refinement levels");
  oracle_cmd->add_option("--points", points, "grid points per axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitParse : kExitOk;
  }

  if (solve_cmd->parsed()) return run_solve(problem_path, trace_path, max_iter, tol, ref);
  if (prox_cmd->parsed())
    return run_prox(legendre_kind, phi_kind, gamma, xi, omega, pparam, alpha);
  if (lw_cmd->parsed()) return run_lambertw(lw_x);
  if (val_cmd->parsed())
    return run_validate(vbeta, veps, eps_opt->count() > 0, valpha, vgammas, vetas,
                        vmus, horizon);
  if (oracle_cmd->parsed()) return run_oracle(oracle_path, box_vals, levels, points);
  return kExitParse;
}
