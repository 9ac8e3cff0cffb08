#pragma once

#include <cctype>
#include <cstdlib>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bregman/multiblock.hpp"
#include "bregman/problem.hpp"
#include "bregman/schedule.hpp"

namespace bregman {

// Flat INI-like problem files: [section] headers, key = value lines, '#'
// comments, whitespace-separated numeric lists. All numerics are 64-bit
// floats with locale-independent decimal points.
//
//   [problem]                        [phi]        (optional; default zero)
//   kind = kl_regression             1 = zero
//   m = 2                            2 = abs_linear 1.0
//   p = 1
//   omega = 1 1                      [legendre]   (composite only)
//   rho = 2                          1 = boltzmann_shannon
//
//   [psi]         (composite only)   [solver]
//   1 = boltzmann_shannon            gamma = 0.25      (one value or a list)
//                                    eps = 0.05        (optional)
//                                    eta = 0 0 0       (optional)
//                                    mu = ...          (optional)
//                                    beta = 0.5        (composite only)
//                                    max_iter = 500
//                                    tol = 1e-9
//                                    x0 = 1 1

struct parse_error : std::runtime_error {
  int line;
  parse_error(int ln, const std::string& msg)
      : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

enum class ProblemKind { composite, is_regression, kl_regression };

struct ProblemConfig {
  ProblemKind kind = ProblemKind::composite;
  std::size_t m = 0, p = 0;
  DenseMatrix omega;  // p x m, row-major in the file
  std::vector<double> rho;
  std::vector<ScalarPhiSpec> phi;
  std::vector<LegendreKind> legendre;   // composite only
  std::vector<LegendreKind> psi_kinds;  // composite only
  double beta = 0.0;                    // composite only; derived otherwise
  bool beta_given = false;

  StepSchedule schedule;
  bool eps_given = false;
  bool gamma_given = false;
  StopRule stop;
  Vector x0;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<double> parse_numbers(const std::string& v, int line) {
  std::vector<double> out;
  std::istringstream is(v);
  std::string tok;
  while (is >> tok) {
    char* end = nullptr;
    const double d = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
      throw parse_error(line, "not a number: '" + tok + "'");
    out.push_back(d);
  }
  return out;
}

inline ScalarPhiSpec parse_phi_spec(const std::string& v, int line) {
  std::istringstream is(v);
  std::string kind;
  is >> kind;
  std::vector<double> params;
  double d;
  while (is >> d) params.push_back(d);
  try {
    const PhiKind k = phi_kind_from_string(kind);
    auto need = [&](std::size_t n) {
      if (params.size() != n)
        throw parse_error(line, "phi kind '" + kind + "' expects " +
                                    std::to_string(n) + " parameter(s)");
    };
    switch (k) {
      case PhiKind::zero: need(0); return ScalarPhiSpec::zero();
      case PhiKind::linear_entropy: need(1); return ScalarPhiSpec::linear_entropy(params[0]);
      case PhiKind::power: need(1); return ScalarPhiSpec::power(params[0]);
      case PhiKind::neg_power: need(1); return ScalarPhiSpec::neg_power(params[0]);
      case PhiKind::neg_root: need(1); return ScalarPhiSpec::neg_root(params[0]);
      case PhiKind::abs_linear: need(1); return ScalarPhiSpec::abs_linear(params[0]);
      case PhiKind::mirror_entropy: need(1); return ScalarPhiSpec::mirror_entropy(params[0]);
      case PhiKind::one_minus_log: need(0); return ScalarPhiSpec::one_minus_log();
      case PhiKind::self_hellinger: need(0); return ScalarPhiSpec::self_hellinger();
      case PhiKind::burg: need(0); return ScalarPhiSpec::burg();
    }
  } catch (const std::invalid_argument& e) {
    throw parse_error(line, e.what());
  }
  throw parse_error(line, "unknown phi kind: " + kind);
}

}  // namespace detail

inline ProblemConfig parse_problem_file(std::istream& is) {
  using detail::trim;
  ProblemConfig cfg;
  cfg.stop.max_iter = 1000;
  cfg.stop.tol = 1e-9;

  std::string section;
  std::map<int, ScalarPhiSpec> phi_entries;
  std::map<int, LegendreKind> legendre_entries;
  std::map<int, LegendreKind> psi_entries;
  bool kind_given = false;

  std::string raw;
  int ln = 0;
  while (std::getline(is, raw)) {
    ++ln;
    std::string line = raw;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw parse_error(ln, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "problem" && section != "phi" && section != "legendre" &&
          section != "psi" && section != "solver")
        throw parse_error(ln, "unknown section [" + section + "]");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw parse_error(ln, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (section.empty()) throw parse_error(ln, "entry before any [section]");

    auto index_key = [&]() -> int {
      char* end = nullptr;
      const long i = std::strtol(key.c_str(), &end, 10);
      if (end == key.c_str() || *end != '\0' || i < 1)
        throw parse_error(ln, "expected a 1-based block index, got '" + key + "'");
      return int(i);
    };

    try {
      if (section == "problem") {
        if (key == "kind") {
          kind_given = true;
          if (val == "composite") cfg.kind = ProblemKind::composite;
          else if (val == "is_regression") cfg.kind = ProblemKind::is_regression;
          else if (val == "kl_regression") cfg.kind = ProblemKind::kl_regression;
          else throw parse_error(ln, "unknown problem kind: " + val);
        } else if (key == "m") {
          cfg.m = std::size_t(detail::parse_numbers(val, ln).at(0));
        } else if (key == "p") {
          cfg.p = std::size_t(detail::parse_numbers(val, ln).at(0));
        } else if (key == "omega") {
          cfg.omega.data = detail::parse_numbers(val, ln);
        } else if (key == "rho") {
          cfg.rho = detail::parse_numbers(val, ln);
        } else {
          throw parse_error(ln, "unknown key '" + key + "' in [problem]");
        }
      } else if (section == "phi") {
        phi_entries[index_key()] = detail::parse_phi_spec(val, ln);
      } else if (section == "legendre") {
        legendre_entries[index_key()] = legendre_kind_from_string(val);
      } else if (section == "psi") {
        psi_entries[index_key()] = legendre_kind_from_string(val);
      } else if (section == "solver") {
        if (key == "gamma") {
          cfg.schedule.gammas = detail::parse_numbers(val, ln);
          cfg.gamma_given = true;
          if (cfg.schedule.gammas.empty()) throw parse_error(ln, "empty gamma list");
        } else if (key == "eta") {
          cfg.schedule.etas = detail::parse_numbers(val, ln);
        } else if (key == "mu") {
          cfg.schedule.mus = detail::parse_numbers(val, ln);
        } else if (key == "eps") {
          cfg.schedule.eps = detail::parse_numbers(val, ln).at(0);
          cfg.eps_given = true;
        } else if (key == "alpha") {
          cfg.schedule.alpha = detail::parse_numbers(val, ln).at(0);
        } else if (key == "beta") {
          cfg.beta = detail::parse_numbers(val, ln).at(0);
          cfg.beta_given = true;
        } else if (key == "max_iter") {
          cfg.stop.max_iter = std::size_t(detail::parse_numbers(val, ln).at(0));
        } else if (key == "tol") {
          cfg.stop.tol = detail::parse_numbers(val, ln).at(0);
        } else if (key == "x0") {
          cfg.x0 = detail::parse_numbers(val, ln);
        } else {
          throw parse_error(ln, "unknown key '" + key + "' in [solver]");
        }
      }
    } catch (const std::invalid_argument& e) {
      throw parse_error(ln, e.what());
    }
  }

  if (!kind_given) throw parse_error(ln, "[problem] kind is required");
  if (cfg.m == 0 || cfg.p == 0) throw parse_error(ln, "[problem] m and p are required");
  if (cfg.omega.data.size() != cfg.m * cfg.p)
    throw parse_error(ln, "omega needs p*m = " + std::to_string(cfg.p * cfg.m) +
                              " entries, got " + std::to_string(cfg.omega.data.size()));
  cfg.omega.rows = cfg.p;
  cfg.omega.cols = cfg.m;
  if (cfg.rho.size() != cfg.p)
    throw parse_error(ln, "rho needs p = " + std::to_string(cfg.p) + " entries");
  if (cfg.x0.size() != cfg.m)
    throw parse_error(ln, "x0 needs m = " + std::to_string(cfg.m) + " entries");

  cfg.phi.assign(cfg.m, ScalarPhiSpec::zero());
  for (const auto& [i, spec] : phi_entries) {
    if (std::size_t(i) > cfg.m)
      throw parse_error(ln, "[phi] index " + std::to_string(i) + " exceeds m");
    cfg.phi[i - 1] = spec;
  }

  if (cfg.kind == ProblemKind::composite) {
    if (legendre_entries.empty())
      throw parse_error(ln, "[legendre] section required for composite problems");
    if (psi_entries.empty())
      throw parse_error(ln, "[psi] section required for composite problems");
    if (!cfg.beta_given)
      throw parse_error(ln, "[solver] beta required for composite problems");
    cfg.legendre.assign(cfg.m, LegendreKind::half_square);
    for (const auto& [i, k] : legendre_entries) {
      if (std::size_t(i) > cfg.m)
        throw parse_error(ln, "[legendre] index exceeds m");
      cfg.legendre[i - 1] = k;
    }
    if (legendre_entries.size() == 1)
      cfg.legendre.assign(cfg.m, legendre_entries.begin()->second);
    cfg.psi_kinds.assign(cfg.p, LegendreKind::half_square);
    for (const auto& [i, k] : psi_entries) {
      if (std::size_t(i) > cfg.p) throw parse_error(ln, "[psi] index exceeds p");
      cfg.psi_kinds[i - 1] = k;
    }
    if (psi_entries.size() == 1)
      cfg.psi_kinds.assign(cfg.p, psi_entries.begin()->second);
  }
  return cfg;
}

// Assembles the runnable problem + schedule. For the regression kinds the
// relative-smoothness constant comes from the prebuilt families.
struct BuiltProblem {
  CompositeProblem problem;
  StepSchedule schedule;
  StopRule stop;
  Vector x0;
  bool multiblock = false;
};

inline BuiltProblem build_from_config(const ProblemConfig& cfg) {
  BuiltProblem out;
  if (cfg.kind == ProblemKind::composite) {
    CompositeProblem p;
    p.phi = cfg.phi;
    p.f = LegendreFunction{cfg.legendre};
    p.L = cfg.omega;
    for (std::size_t k = 0; k < cfg.p; ++k)
      p.psi.push_back({cfg.psi_kinds[k], cfg.rho[k]});
    p.beta = cfg.beta;
    out.problem = std::move(p);
  } else {
    const RegressionKind rk = cfg.kind == ProblemKind::is_regression
                                  ? RegressionKind::itakura_saito
                                  : RegressionKind::kullback_leibler;
    MultiBlockProblem mb = build_regression(rk, cfg.omega, cfg.rho, cfg.phi);
    out.problem = flatten(mb);
    out.multiblock = true;
  }

  out.schedule = cfg.schedule;
  out.schedule.beta = out.problem.beta;
  if (!cfg.eps_given)
    out.schedule.eps = 0.05 * out.problem.beta / (out.problem.beta + 1.0);
  if (!cfg.gamma_given) {
    const double cap = (out.schedule.scaled() ? out.schedule.alpha : 1.0) *
                       out.problem.beta * (1.0 - out.schedule.eps);
    out.schedule.gammas = {0.5 * (out.schedule.eps + cap)};
  }
  out.stop = cfg.stop;
  out.x0 = cfg.x0;
  return out;
}

}  // namespace bregman
