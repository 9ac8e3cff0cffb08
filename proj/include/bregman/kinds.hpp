#pragma once

#include <stdexcept>
#include <string>

namespace bregman {

// Legendre generator kinds. The names are the stable identifiers used by
// the problem-file format.
enum class LegendreKind {
  boltzmann_shannon,  // t ln t - t on [0,inf)
  fermi_dirac,        // t ln t + (1-t) ln(1-t) on [0,1]
  hellinger,          // -sqrt(1-t^2) on [-1,1]
  burg,               // -ln t on (0,inf)
  half_square         // t^2/2 on R
};

enum class PhiKind {
  zero,
  linear_entropy,  // t ln t - omega*t on [0,inf)
  power,           // t^p/p on [0,inf), p >= 1
  neg_power,       // t^(-p)/p on (0,inf), p >= 1
  neg_root,        // -t^p/p on [0,inf), 0 < p < 1
  abs_linear,      // alpha*|t|, alpha > 0
  mirror_entropy,  // (1-t) ln(1-t) - omega*(1-t) on (-inf,1]
  one_minus_log,   // (1-t) ln(1-t) + t on (-inf,1]
  self_hellinger,  // -sqrt(1-t^2) on [-1,1]
  burg             // -ln t on (0,inf)
};

// Scalar nonsmooth-term spec: a kind plus its parameter (at most one of
// omega/p/alpha is meaningful, depending on the kind).
struct ScalarPhiSpec {
  PhiKind kind = PhiKind::zero;
  double omega = 0.0;
  double p = 0.0;
  double alpha = 0.0;

  static ScalarPhiSpec zero() { return {PhiKind::zero, 0, 0, 0}; }
  static ScalarPhiSpec linear_entropy(double omega) {
    return {PhiKind::linear_entropy, omega, 0, 0};
  }
  static ScalarPhiSpec power(double p) {
    if (p < 1.0) throw std::invalid_argument("power: requires p >= 1");
    return {PhiKind::power, 0, p, 0};
  }
  static ScalarPhiSpec neg_power(double p) {
    if (p < 1.0) throw std::invalid_argument("neg_power: requires p >= 1");
    return {PhiKind::neg_power, 0, p, 0};
  }
  static ScalarPhiSpec neg_root(double p) {
    if (p <= 0.0 || p >= 1.0)
      throw std::invalid_argument("neg_root: requires 0 < p < 1");
    return {PhiKind::neg_root, 0, p, 0};
  }
  static ScalarPhiSpec abs_linear(double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("abs_linear: requires alpha > 0");
    return {PhiKind::abs_linear, 0, 0, alpha};
  }
  static ScalarPhiSpec mirror_entropy(double omega) {
    return {PhiKind::mirror_entropy, omega, 0, 0};
  }
  static ScalarPhiSpec one_minus_log() { return {PhiKind::one_minus_log, 0, 0, 0}; }
  static ScalarPhiSpec self_hellinger() { return {PhiKind::self_hellinger, 0, 0, 0}; }
  static ScalarPhiSpec burg() { return {PhiKind::burg, 0, 0, 0}; }
};

inline std::string to_string(LegendreKind k) {
  switch (k) {
    case LegendreKind::boltzmann_shannon: return "boltzmann_shannon";
    case LegendreKind::fermi_dirac: return "fermi_dirac";
    case LegendreKind::hellinger: return "hellinger";
    case LegendreKind::burg: return "burg";
    case LegendreKind::half_square: return "half_square";
  }
  return "?";
}

inline std::string to_string(PhiKind k) {
  switch (k) {
    case PhiKind::zero: return "zero";
    case PhiKind::linear_entropy: return "linear_entropy";
    case PhiKind::power: return "power";
    case PhiKind::neg_power: return "neg_power";
    case PhiKind::neg_root: return "neg_root";
    case PhiKind::abs_linear: return "abs_linear";
    case PhiKind::mirror_entropy: return "mirror_entropy";
    case PhiKind::one_minus_log: return "one_minus_log";
    case PhiKind::self_hellinger: return "self_hellinger";
    case PhiKind::burg: return "burg";
  }
  return "?";
}

inline LegendreKind legendre_kind_from_string(const std::string& s) {
  if (s == "boltzmann_shannon") return LegendreKind::boltzmann_shannon;
  if (s == "fermi_dirac") return LegendreKind::fermi_dirac;
  if (s == "hellinger") return LegendreKind::hellinger;
  if (s == "burg") return LegendreKind::burg;
  if (s == "half_square") return LegendreKind::half_square;
  throw std::invalid_argument("unknown legendre kind: " + s);
}

inline PhiKind phi_kind_from_string(const std::string& s) {
  if (s == "zero") return PhiKind::zero;
  if (s == "linear_entropy") return PhiKind::linear_entropy;
  if (s == "power") return PhiKind::power;
  if (s == "neg_power") return PhiKind::neg_power;
  if (s == "neg_root") return PhiKind::neg_root;
  if (s == "abs_linear") return PhiKind::abs_linear;
  if (s == "mirror_entropy") return PhiKind::mirror_entropy;
  if (s == "one_minus_log") return PhiKind::one_minus_log;
  if (s == "self_hellinger") return PhiKind::self_hellinger;
  if (s == "burg") return PhiKind::burg;
  throw std::invalid_argument("unknown phi kind: " + s);
}

}  // namespace bregman
