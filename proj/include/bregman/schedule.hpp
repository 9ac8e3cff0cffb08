#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace bregman {

// Step-size data for the forward-backward iteration. The last entry of each
// sequence repeats past the end, so a single value means a constant schedule.
// An empty mus means the constant-generator case f_n = f; otherwise
// f_n = mu_n * f with mu_n >= alpha.
struct StepSchedule {
  std::vector<double> gammas{0.5};
  std::vector<double> etas;  // empty -> all zero
  std::vector<double> mus;   // empty -> constant f
  double eps = 0.05;
  double beta = 1.0;
  double alpha = 1.0;

  double gamma(std::size_t n) const {
    return gammas[n < gammas.size() ? n : gammas.size() - 1];
  }
  double eta(std::size_t n) const {
    if (etas.empty()) return 0.0;
    return etas[n < etas.size() ? n : etas.size() - 1];
  }
  double mu(std::size_t n) const {
    if (mus.empty()) return 1.0;
    return mus[n < mus.size() ? n : mus.size() - 1];
  }
  bool scaled() const { return !mus.empty(); }

  // eps at 5% of the admissible range, gamma constant at the midpoint of
  // [eps, beta(1-eps)].
  static StepSchedule defaults(double beta) {
    StepSchedule s;
    s.beta = beta;
    s.eps = 0.05 * beta / (beta + 1.0);
    s.gammas = {0.5 * (s.eps + beta * (1.0 - s.eps))};
    return s;
  }
};

struct ScheduleViolation {
  std::size_t index;
  std::string inequality;  // the violated inequality, with numbers plugged in
};

// Checks the step-size inequalities over the horizon:
//   eps <= gamma_n <= B(1-eps) and (1+eta_n)gamma_n - gamma_{n+1} <= B*eta_n
// with B = beta in the constant case and B = alpha*beta in the scaled case,
// plus mu_n >= alpha and (1+eta_n)mu_n >= mu_{n+1} when a mu sequence is
// present. Violations are data, not errors.
inline std::vector<ScheduleViolation> validate_schedule(const StepSchedule& s,
                                                        std::size_t horizon) {
  std::vector<ScheduleViolation> out;
  const double cap = s.scaled() ? s.alpha * s.beta : s.beta;
  auto num = [](double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
  };

  if (!(s.eps > 0.0 && s.eps < s.beta / (s.beta + 1.0)))
    out.push_back({0, "eps = " + num(s.eps) + " outside ]0, beta/(beta+1)[ = ]0, " +
                          num(s.beta / (s.beta + 1.0)) + "["});

  for (std::size_t n = 0; n < horizon; ++n) {
    const double g = s.gamma(n);
    if (g < s.eps)
      out.push_back({n, "gamma_" + std::to_string(n) + " = " + num(g) +
                            " < eps = " + num(s.eps)});
    if (g > cap * (1.0 - s.eps))
      out.push_back({n, "gamma_" + std::to_string(n) + " = " + num(g) + " > " +
                            (s.scaled() ? "alpha*beta" : "beta") +
                            "*(1-eps) = " + num(cap * (1.0 - s.eps))});
    const double lhs = (1.0 + s.eta(n)) * g - s.gamma(n + 1);
    const double rhs = cap * s.eta(n);
    if (lhs > rhs + 1e-15 * std::max(1.0, std::abs(rhs)))
      out.push_back({n, "(1+eta_" + std::to_string(n) + ")*gamma_" +
                            std::to_string(n) + " - gamma_" + std::to_string(n + 1) +
                            " = " + num(lhs) + " > " +
                            (s.scaled() ? "alpha*beta" : "beta") + "*eta_" +
                            std::to_string(n) + " = " + num(rhs)});
    if (s.scaled()) {
      if (s.mu(n) < s.alpha)
        out.push_back({n, "mu_" + std::to_string(n) + " = " + num(s.mu(n)) +
                              " < alpha = " + num(s.alpha)});
      if ((1.0 + s.eta(n)) * s.mu(n) < s.mu(n + 1))
        out.push_back({n, "(1+eta_" + std::to_string(n) + ")*mu_" +
                              std::to_string(n) + " = " +
                              num((1.0 + s.eta(n)) * s.mu(n)) + " < mu_" +
                              std::to_string(n + 1) + " = " + num(s.mu(n + 1))});
    }
  }
  return out;
}

}  // namespace bregman
