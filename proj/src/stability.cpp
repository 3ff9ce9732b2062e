#include "linarg/stability.hpp"

#include <cmath>

namespace linarg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::None: return "inconclusive";
    case Verdict::Theorem1a: return "theorem1a";
    case Verdict::Theorem1b: return "theorem1b";
    case Verdict::Corollary1: return "corollary1";
    case Verdict::Corollary2: return "corollary2";
    case Verdict::Theorem2Conditional: return "theorem2_conditional";
  }
  return "?";
}

double alpha_direct(const LinearArgEquation& eq) {
  double sum = 0.0;
  for (int i = 0; i <= eq.k; ++i)
    sum += eq.ctx.norm(eq.a[static_cast<std::size_t>(i)]) +
           eq.g.sigma * eq.ctx.norm(eq.b[static_cast<std::size_t>(i)]);
  return sum;
}

double alpha_factored(const ReductionResult& reduction, double sigma) {
  const AlgebraContext& ctx = reduction.factor.ctx;
  double sum = 0.0;
  for (std::size_t i = 0; i < reduction.p.size(); ++i)
    sum += ctx.norm(reduction.p[i]) + sigma * ctx.norm(reduction.q[i]);
  return sum;
}

StabilityReport check_theorem1(const LinearArgEquation& eq,
                               const std::optional<Element>& rho,
                               double root_tol) {
  StabilityReport report;
  report.alpha_direct_value = alpha_direct(eq);
  report.direct_holds = report.alpha_direct_value < 1.0;

  if (rho) {
    ReductionOutcome outcome = reduce_order(eq, *rho, root_tol);
    report.root_status = outcome.status;
    report.residual_P = outcome.residual_P;
    report.residual_Q = outcome.residual_Q;
    if (outcome.accepted()) {
      report.rho_used = *rho;
      report.rho_norm = eq.ctx.norm(*rho);
      report.alpha_factored_value = alpha_factored(*outcome.result, eq.g.sigma);
      // |rho| >= 1 is treated as inconclusive, strict inequality required
      report.factored_holds =
          *report.rho_norm < 1.0 && *report.alpha_factored_value < 1.0;
    }
  }

  if (report.direct_holds)
    report.verdict = Verdict::Theorem1a;
  else if (report.factored_holds.value_or(false))
    report.verdict = Verdict::Theorem1b;
  return report;
}

namespace {

constexpr double kShapeTol = 0.0;

}  // namespace

CorollaryReport check_corollary1(const LinearArgEquation& eq, double tol) {
  if (tol <= 0.0) throw config_error("tolerance must be positive");
  for (int i = 1; i <= eq.k; ++i)
    if (!eq.ctx.is_zero(eq.a[static_cast<std::size_t>(i)], kShapeTol))
      throw config_error("corollary 1 requires the shape a = (a, 0, ..., 0)");
  const Element& a = eq.a[0];
  if (!eq.ctx.try_inverse(a, 1e-9))
    throw config_error("corollary 1 requires a to be a unit");

  CorollaryReport report;
  report.root_norm = eq.ctx.norm(a);
  report.root_norm_ok = report.root_norm < 1.0;
  report.residual = eq.ctx.norm(eval_Q(eq.ctx, eq.b, a));
  report.residual_ok = report.residual <= tol;
  FactorCoefficients fc = factor_coefficients(eq.ctx, eq.a, eq.b, a);
  for (const Element& q : fc.q) report.sum += eq.ctx.norm(q);
  report.limit = 1.0 / eq.g.sigma;
  report.sum_ok = report.sum < report.limit;
  report.holds = report.root_norm_ok && report.residual_ok && report.sum_ok;
  return report;
}

CorollaryReport check_corollary2(const LinearArgEquation& eq, double tol) {
  if (tol <= 0.0) throw config_error("tolerance must be positive");
  const Element one = eq.ctx.identity();
  if (!eq.ctx.is_zero(eq.ctx.sub(eq.b[0], one), kShapeTol))
    throw config_error("corollary 2 requires the argument shape (1, -b, 0, ..., 0)");
  for (int i = 2; i <= eq.k; ++i)
    if (!eq.ctx.is_zero(eq.b[static_cast<std::size_t>(i)], kShapeTol))
      throw config_error("corollary 2 requires the argument shape (1, -b, 0, ..., 0)");
  const Element b = eq.ctx.negate(eq.b[1]);
  if (!eq.ctx.try_inverse(b, 1e-9))
    throw config_error("corollary 2 requires b to be a unit");

  CorollaryReport report;
  report.root_norm = eq.ctx.norm(b);
  report.root_norm_ok = report.root_norm < 1.0;
  report.residual = eq.ctx.norm(eval_P(eq.ctx, eq.a, b));
  report.residual_ok = report.residual <= tol;
  FactorCoefficients fc = factor_coefficients(eq.ctx, eq.a, eq.b, b);
  for (const Element& p : fc.p) report.sum += eq.ctx.norm(p);
  report.limit = 1.0 - eq.g.sigma;
  report.sum_ok = report.sum < report.limit;
  report.holds = report.root_norm_ok && report.residual_ok && report.sum_ok;
  return report;
}

SigmaBound sigma_bound_er(double a_norm, int k) {
  SigmaBound bound;
  if (a_norm <= 0.0 || a_norm >= 1.0) return bound;
  if (k < 1) throw config_error("sigma_bound_er requires k >= 1");
  bound.valid = true;
  bound.value = (1.0 - a_norm) / (1.0 - std::pow(a_norm, k));
  return bound;
}

SigmaBound sigma_bound_wc(const LinearArgEquation& eq) {
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (int i = 0; i <= eq.k; ++i) {
    sum_a += eq.ctx.norm(eq.a[static_cast<std::size_t>(i)]);
    sum_b += eq.ctx.norm(eq.b[static_cast<std::size_t>(i)]);
  }
  SigmaBound bound;
  if (sum_a >= 1.0 || sum_b == 0.0) return bound;
  bound.valid = true;
  bound.value = (1.0 - sum_a) / sum_b;
  return bound;
}

ReductionOutcome theorem2_factor(const LinearArgEquation& eq, double tol) {
  if (eq.k != 1) throw config_error("theorem 2 applies to second-order equations (k = 1)");
  const Element one = eq.ctx.identity();
  if (!eq.ctx.is_zero(eq.ctx.sub(eq.b[0], one), kShapeTol))
    throw config_error("theorem 2 requires the argument shape x_n - b x_{n-1}");
  const Element b = eq.ctx.negate(eq.b[1]);
  return reduce_order(eq, b, tol);
}

}  // namespace linarg
