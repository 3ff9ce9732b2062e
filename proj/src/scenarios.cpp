#include "linarg/scenarios.hpp"

#include <cmath>

namespace linarg {

ScenarioEquation make_dham(double a, int k, double sigma,
                           CoefficientRule alpha_rule) {
  if (!(std::abs(a) > 0.0 && std::abs(a) < 1.0))
    throw config_error("dham requires 0 < |a| < 1");
  if (k < 1) throw config_error("dham requires k >= 1");

  AlgebraContext ctx = AlgebraContext::real();
  LinearArgEquation eq{ctx, k, {}, {}, {}};
  eq.a.assign(static_cast<std::size_t>(k + 1), ctx.zero());
  eq.a[0] = ctx.constant(a);
  eq.b.assign(static_cast<std::size_t>(k + 1), ctx.zero());
  eq.b[0] = ctx.identity();
  eq.b[static_cast<std::size_t>(k)] = ctx.constant(-std::pow(a, k));
  eq.g = NonlinearitySpec{NonlinearityFamily::PointwiseTanh, sigma,
                          std::move(alpha_rule)};
  eq.validate();
  return {std::move(eq), ctx.constant(a)};
}

ScenarioEquation make_c01(double alpha, double beta, double sigma, int m,
                          CoefficientRule phi_rule) {
  if (!(beta > 0.0 && beta < 1.0))
    throw config_error("c01 requires 0 < beta < 1");
  if (!(3.0 * beta <= alpha))
    throw config_error("c01 requires 3*beta <= alpha");
  if (!(alpha < 2.0 + beta))
    throw config_error("c01 requires alpha < 2 + beta");
  if (!(sigma < (2.0 + beta - alpha) / 2.0))
    throw config_error("c01 requires sigma < (2 + beta - alpha)/2");

  AlgebraContext ctx = AlgebraContext::grid(m);
  Element a0 = ctx.zero();
  Element a1 = ctx.zero();
  Element b = ctx.zero();
  for (int j = 0; j < m; ++j) {
    const double r = static_cast<double>(j) / (m - 1);
    a0.data[static_cast<std::size_t>(j)] = alpha * r / (r + 1.0);
    a1.data[static_cast<std::size_t>(j)] =
        beta * (beta - alpha * r) / ((r + 1.0) * (r + 1.0));
    b.data[static_cast<std::size_t>(j)] = beta / (r + 1.0);
  }

  LinearArgEquation eq{ctx, 1, {}, {}, {}};
  eq.a = {std::move(a0), std::move(a1)};
  eq.b = {ctx.identity(), ctx.negate(b)};
  eq.g = NonlinearitySpec{NonlinearityFamily::CumulativeIntegral, sigma,
                          std::move(phi_rule)};
  eq.validate();
  return {std::move(eq), std::move(b)};
}

ScenarioEquation make_th(double a, double b, double sigma) {
  if (!(sigma > 0.0)) throw config_error("th requires sigma > 0");
  if (!(b > 0.0 && b < 1.0)) throw config_error("th requires 0 < b < 1");
  if (!(a < b)) throw config_error("th requires a < b");

  AlgebraContext ctx = AlgebraContext::real();
  LinearArgEquation eq{ctx, 1, {}, {}, {}};
  eq.a = {ctx.constant(a), ctx.constant(b * (b - a))};
  eq.b = {ctx.identity(), ctx.constant(-b)};
  eq.g = NonlinearitySpec{NonlinearityFamily::PointwiseTanh, sigma,
                          CoefficientRule::constant(sigma)};
  eq.validate();
  return {std::move(eq), ctx.constant(b)};
}

double h_map(double a, double b, double sigma, double xi) {
  return (a - b) * xi + sigma * std::tanh(xi);
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::GlobalConvergence: return "global_convergence";
    case Regime::LocalBasin: return "local_basin";
    case Regime::RepellingOrigin: return "repelling_origin";
    case Regime::Invalid: return "invalid";
  }
  return "?";
}

Regime classify_regime(double a, double b, double sigma) {
  if (a >= b) return Regime::Invalid;
  if (a >= b - 1.0) return Regime::GlobalConvergence;
  if (a > b - sigma - 1.0) return Regime::LocalBasin;
  return Regime::RepellingOrigin;
}

std::optional<double> find_tau(double a, double b, double sigma, double tol) {
  if (tol <= 0.0) throw config_error("bisection tolerance must be positive");
  // positive root of f(tau) = sigma tanh(tau) - (b-a-1) tau exists exactly
  // when 0 < (b-a-1)/sigma < 1
  const double slope = b - a - 1.0;
  if (slope <= 0.0 || slope >= sigma) return std::nullopt;

  auto f = [&](double tau) { return sigma * std::tanh(tau) - slope * tau; };

  double lo = tol;
  double hi = 1.0;
  while (f(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e6) return std::nullopt;
  }
  if (f(lo) <= 0.0) lo = 0.0;  // root hugs the origin; keep the bracket valid
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::string to_string(ProbeResult r) {
  switch (r) {
    case ProbeResult::Converged: return "converged";
    case ProbeResult::Diverged: return "diverged";
    case ProbeResult::Undecided: return "undecided";
  }
  return "?";
}

ProbeResult basin_probe(double a, double b, double sigma, double t0,
                        int max_steps, double bound) {
  double t = t0;
  for (int n = 0; n < max_steps; ++n) {
    if (std::abs(t) < 1e-9) return ProbeResult::Converged;
    if (std::abs(t) > bound) return ProbeResult::Diverged;
    t = h_map(a, b, sigma, t);
  }
  return ProbeResult::Undecided;
}

BifurcationScan bifurcation_scan(double b, double sigma, double a_min,
                                 double a_max, int steps) {
  if (steps < 2) throw config_error("scan needs at least 2 grid points");
  BifurcationScan scan;
  scan.b = b;
  scan.sigma = sigma;
  scan.rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    ScanRow row;
    row.a = a_min + (a_max - a_min) * static_cast<double>(i) / (steps - 1);
    row.valid = row.a < b;
    row.sig_ok = sigma < 1.0 - row.a + b;
    if (row.valid) {
      row.regime = classify_regime(row.a, b, sigma);
      if (row.regime == Regime::LocalBasin)
        row.tau = find_tau(row.a, b, sigma, 1e-10);
    }
    scan.rows.push_back(row);
  }
  return scan;
}

}  // namespace linarg
