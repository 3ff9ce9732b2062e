#pragma once

#include <optional>
#include <string>

#include "linarg/reduction.hpp"

namespace linarg {

enum class Verdict {
  None,  // no sufficient condition applies; never means "divergent"
  Theorem1a,
  Theorem1b,
  Corollary1,
  Corollary2,
  Theorem2Conditional,
};

std::string to_string(Verdict v);

// sum_{i=0}^{k} (|a_i| + sigma |b_i|)
double alpha_direct(const LinearArgEquation& eq);

// sum_{i=0}^{k-1} (|p_i| + sigma |q_i|)
double alpha_factored(const ReductionResult& reduction, double sigma);

struct StabilityReport {
  double alpha_direct_value = 0.0;
  bool direct_holds = false;
  std::optional<Element> rho_used;
  std::optional<double> rho_norm;
  std::optional<double> alpha_factored_value;
  std::optional<bool> factored_holds;
  RootStatus root_status = RootStatus::Accepted;
  double residual_P = 0.0;
  double residual_Q = 0.0;
  Verdict verdict = Verdict::None;
};

// Fills the direct branch always and, when a candidate root is supplied,
// the factored branch. A rejected root surfaces via root_status with the
// factored branch left empty.
StabilityReport check_theorem1(const LinearArgEquation& eq,
                               const std::optional<Element>& rho,
                               double root_tol);

struct CorollaryReport {
  double root_norm = 0.0;       // |a| or |b|
  bool root_norm_ok = false;    // strict < 1
  double residual = 0.0;        // |Q(a)| or |P(b)|
  bool residual_ok = false;
  double sum = 0.0;             // the corollary's partial-sum quantity
  double limit = 0.0;           // 1/sigma or 1-sigma
  bool sum_ok = false;          // strict inequality
  bool holds = false;
};

// Requires the shape a = (a, 0, ..., 0) with a a unit. Conditions:
// |a| < 1, Q(a) = 0 (within tol), sum_{i<k} |b_0 a^i + ... + b_i| < 1/sigma.
CorollaryReport check_corollary1(const LinearArgEquation& eq, double tol);

// Requires the argument shape b = (1, -b, 0, ..., 0) with b a unit.
// Conditions: |b| < 1, P(b) = 0 (within tol),
// sum_{i<k} |b^{i+1} - a_0 b^i - ... - a_i| < 1 - sigma.
CorollaryReport check_corollary2(const LinearArgEquation& eq, double tol);

struct SigmaBound {
  bool valid = false;  // false when no positive sigma is admitted
  double value = 0.0;  // supremum of admissible sigma
};

// Supremum of sigma under (1-|a|)/(1-|a|^k); requires 0 < a_norm < 1.
SigmaBound sigma_bound_er(double a_norm, int k);

// Supremum of sigma under sum|a_i| + sigma sum|b_i| < 1 for the given
// equation's coefficients.
SigmaBound sigma_bound_wc(const LinearArgEquation& eq);

// Second-order (k=1) equation with argument x_n - b x_{n-1} and
// a_0 b + a_1 = b^2: returns the first-order factor
// t_{n+1} = (a_0 - b) t_n + g_n(t_n). Root failures surface in the outcome.
ReductionOutcome theorem2_factor(const LinearArgEquation& eq, double tol);

}  // namespace linarg
