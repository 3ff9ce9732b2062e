#include "linarg/reduction.hpp"

#include <algorithm>
#include <cmath>

namespace linarg {

Element eval_P(const AlgebraContext& ctx, const std::vector<Element>& a,
               const Element& rho) {
  const int k = static_cast<int>(a.size()) - 1;
  if (k < 0) throw shape_error("coefficient list for P is empty");
  Element value = ctx.power(rho, k + 1);
  for (int i = 0; i <= k; ++i)
    value = ctx.sub(value, ctx.multiply(a[static_cast<std::size_t>(i)],
                                        ctx.power(rho, k - i)));
  return value;
}

Element eval_Q(const AlgebraContext& ctx, const std::vector<Element>& b,
               const Element& rho) {
  const int k = static_cast<int>(b.size()) - 1;
  if (k < 0) throw shape_error("coefficient list for Q is empty");
  Element value = ctx.zero();
  for (int i = 0; i <= k; ++i)
    value = ctx.add(value, ctx.multiply(b[static_cast<std::size_t>(i)],
                                        ctx.power(rho, k - i)));
  return value;
}

FactorCoefficients factor_coefficients(const AlgebraContext& ctx,
                                       const std::vector<Element>& a,
                                       const std::vector<Element>& b,
                                       const Element& rho) {
  if (a.size() != b.size() || a.size() < 2)
    throw shape_error("factor coefficients need matching lists of length k+1 >= 2");
  const int k = static_cast<int>(a.size()) - 1;
  FactorCoefficients fc;
  fc.p.reserve(static_cast<std::size_t>(k));
  fc.q.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Element p = ctx.power(rho, i + 1);
    for (int j = 0; j <= i; ++j)
      p = ctx.sub(p, ctx.multiply(a[static_cast<std::size_t>(j)],
                                  ctx.power(rho, i - j)));
    Element q = ctx.zero();
    for (int j = 0; j <= i; ++j)
      q = ctx.add(q, ctx.multiply(b[static_cast<std::size_t>(j)],
                                  ctx.power(rho, i - j)));
    fc.p.push_back(std::move(p));
    fc.q.push_back(std::move(q));
  }
  return fc;
}

ReductionOutcome reduce_order(const LinearArgEquation& eq, const Element& rho,
                              double root_tol) {
  if (root_tol <= 0.0) throw config_error("root tolerance must be positive");
  if (eq.k < 1) throw config_error("reduction requires k >= 1");
  eq.ctx.check_shape(rho);

  ReductionOutcome outcome;
  outcome.residual_P = eq.ctx.norm(eval_P(eq.ctx, eq.a, rho));
  outcome.residual_Q = eq.ctx.norm(eval_Q(eq.ctx, eq.b, rho));

  if (!eq.ctx.try_inverse(rho, std::max(root_tol, 1e-9))) {
    outcome.status = RootStatus::NotAUnit;
    return outcome;
  }
  if (outcome.residual_P > root_tol || outcome.residual_Q > root_tol) {
    outcome.status = RootStatus::ResidualTooLarge;
    return outcome;
  }

  FactorCoefficients fc = factor_coefficients(eq.ctx, eq.a, eq.b, rho);

  LinearArgEquation factor{eq.ctx, eq.k - 1, {}, {}, eq.g};
  factor.a.reserve(fc.p.size());
  for (const Element& p : fc.p) factor.a.push_back(eq.ctx.negate(p));
  factor.b = fc.q;

  outcome.result = ReductionResult{rho, outcome.residual_P, outcome.residual_Q,
                                   std::move(fc.p), std::move(fc.q),
                                   std::move(factor)};
  return outcome;
}

std::vector<Element> initial_t(const AlgebraContext& ctx,
                               const std::vector<Element>& init_x,
                               const Element& rho) {
  if (init_x.size() < 2) throw shape_error("initial_t needs at least two x values");
  ctx.check_shape(rho);
  const int k = static_cast<int>(init_x.size()) - 1;
  // oldest first: t[m] = t_{m-(k-1)} = init_x[m+1] - rho * init_x[m]
  std::vector<Element> t;
  t.reserve(static_cast<std::size_t>(k));
  for (int m = 0; m < k; ++m)
    t.push_back(ctx.sub(init_x[static_cast<std::size_t>(m + 1)],
                        ctx.multiply(rho, init_x[static_cast<std::size_t>(m)])));
  return t;
}

std::vector<Element> cofactor_reconstruct(const AlgebraContext& ctx,
                                          const Element& rho, const Element& x0,
                                          std::span<const Element> t) {
  ctx.check_shape(rho);
  ctx.check_shape(x0);
  std::vector<Element> x;
  x.reserve(t.size());
  Element cur = x0;
  for (const Element& tn : t) {
    cur = ctx.add(ctx.multiply(rho, cur), tn);
    x.push_back(cur);
  }
  return x;
}

double split_consistency_check(const LinearArgEquation& eq, const Element& rho,
                               const std::vector<Element>& init, int steps,
                               double root_tol) {
  ReductionOutcome outcome = reduce_order(eq, rho, root_tol);
  if (!outcome.accepted())
    throw numeric_error("split consistency check requires an accepted root");
  const LinearArgEquation& factor = outcome.result->factor;

  Trajectory direct = iterate(eq, init, steps);

  Trajectory factored = iterate(factor, initial_t(eq.ctx, init, rho), steps);
  const int usable = std::min({direct.steps(), factored.steps(), steps});
  std::vector<Element> t_tail;
  t_tail.reserve(static_cast<std::size_t>(usable));
  for (int n = 1; n <= usable; ++n) t_tail.push_back(factored.at(n));
  std::vector<Element> reconstructed =
      cofactor_reconstruct(eq.ctx, rho, init.back(), t_tail);

  double worst = 0.0;
  for (int n = 1; n <= usable; ++n)
    worst = std::max(worst, eq.ctx.norm(eq.ctx.sub(
                                direct.at(n),
                                reconstructed[static_cast<std::size_t>(n - 1)])));
  return worst;
}

}  // namespace linarg
