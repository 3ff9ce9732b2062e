#pragma once

#include <optional>
#include <span>
#include <vector>

#include "linarg/equations.hpp"

namespace linarg {

// P(xi) = xi^{k+1} - sum a_i xi^{k-i}; coefficients multiply powers on the
// left (non-commutative order as written).
Element eval_P(const AlgebraContext& ctx, const std::vector<Element>& a,
               const Element& rho);

// Q(xi) = sum b_i xi^{k-i}.
Element eval_Q(const AlgebraContext& ctx, const std::vector<Element>& b,
               const Element& rho);

// p_i = rho^{i+1} - a_0 rho^i - ... - a_i,
// q_i = b_0 rho^i + b_1 rho^{i-1} + ... + b_i,  i = 0..k-1.
struct FactorCoefficients {
  std::vector<Element> p;
  std::vector<Element> q;
};

FactorCoefficients factor_coefficients(const AlgebraContext& ctx,
                                       const std::vector<Element>& a,
                                       const std::vector<Element>& b,
                                       const Element& rho);

struct ReductionResult {
  Element rho;
  double residual_P = 0.0;
  double residual_Q = 0.0;
  std::vector<Element> p;
  std::vector<Element> q;
  // t_{n+1} = -sum p_i t_{n-i} + g_n(sum q_i t_{n-i}), order k
  LinearArgEquation factor;
};

enum class RootStatus { Accepted, NotAUnit, ResidualTooLarge };

struct ReductionOutcome {
  RootStatus status = RootStatus::Accepted;
  double residual_P = 0.0;
  double residual_Q = 0.0;
  std::optional<ReductionResult> result;

  bool accepted() const { return status == RootStatus::Accepted; }
};

// Validates the candidate root (unit, |P(rho)| and |Q(rho)| <= root_tol)
// and builds the order-k factor equation carrying the same nonlinearity.
ReductionOutcome reduce_order(const LinearArgEquation& eq, const Element& rho,
                              double root_tol);

// t_{-i} = x_{-i} - rho x_{-i-1}, i = 0..k-1. init_x is x_{-k}..x_0 oldest
// first; the result is t_{-(k-1)}..t_0 oldest first.
std::vector<Element> initial_t(const AlgebraContext& ctx,
                               const std::vector<Element>& init_x,
                               const Element& rho);

// x_{n+1} = rho x_n + t_{n+1} from x_0 and t_1..t_N; returns x_1..x_N.
std::vector<Element> cofactor_reconstruct(const AlgebraContext& ctx,
                                          const Element& rho, const Element& x0,
                                          std::span<const Element> t);

// Runs the factor equation from the transformed initial values, rebuilds x
// through the cofactor recurrence, and compares with direct iteration.
// Returns the max norm deviation over n = 1..steps.
double split_consistency_check(const LinearArgEquation& eq, const Element& rho,
                               const std::vector<Element>& init, int steps,
                               double root_tol);

}  // namespace linarg
